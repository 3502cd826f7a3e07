//! Exploratory census of nibbled staircase polygons.
//!
//! A staircase polygon is bounded by two lattice paths from the origin to
//! the same endpoint, using unit north and east steps, that meet only at
//! their ends. The upper path starts north, the lower path starts east.
//! Nibbling removes `alpha` units from the upper path's first vertical run
//! and `beta` units from its last horizontal run from the measured length.
//!
//! Reading used here: the measured size is the total boundary length of
//! the polygon (both paths) minus `alpha + beta`, and each nibble leaves at
//! least one unit of its run, so `alpha < first vertical run` and
//! `beta < last horizontal run`. With no nibbling a polygon of `n` cells
//! along its diagonal measures `2n + 2`.

use std::collections::BTreeMap;

use serde::Serialize;

/// A staircase polygon with a chosen nibble on each end of the upper path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NibbledPolygon {
    /// `true` for a north step; read from the origin.
    pub upper: Vec<bool>,
    pub lower: Vec<bool>,
    pub alpha: u32,
    pub beta: u32,
}

impl NibbledPolygon {
    pub fn first_vertical_run(&self) -> u32 {
        self.upper.iter().take_while(|&&n| n).count() as u32
    }

    pub fn last_horizontal_run(&self) -> u32 {
        self.upper.iter().rev().take_while(|&&n| !n).count() as u32
    }

    /// Boundary length minus the nibbles.
    pub fn measured_size(&self) -> usize {
        self.upper.len() + self.lower.len() - self.alpha as usize - self.beta as usize
    }
}

/// Counts keyed by (measured size, alpha, beta).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NibbledCensus {
    max_size: usize,
    counts: BTreeMap<(usize, u32, u32), u64>,
}

#[derive(Serialize)]
struct NibbledCountJson {
    hp: usize,
    alpha: u32,
    beta: u32,
    count: u64,
}

#[derive(Serialize)]
struct NibbledCensusJson<'a> {
    object: &'a str,
    counts: Vec<NibbledCountJson>,
}

impl NibbledCensus {
    fn new(max_size: usize) -> Self {
        NibbledCensus {
            max_size,
            counts: BTreeMap::new(),
        }
    }

    fn record(&mut self, size: usize, alpha: u32, beta: u32) {
        if size <= self.max_size {
            *self.counts.entry((size, alpha, beta)).or_insert(0) += 1;
        }
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn counts(&self) -> &BTreeMap<(usize, u32, u32), u64> {
        &self.counts
    }

    pub fn count(&self, size: usize, alpha: u32, beta: u32) -> u64 {
        self.counts.get(&(size, alpha, beta)).copied().unwrap_or(0)
    }

    /// Counts at sizes `0..=max_size` for fixed nibbles.
    pub fn slice(&self, alpha: u32, beta: u32) -> Vec<u64> {
        (0..=self.max_size)
            .map(|h| self.count(h, alpha, beta))
            .collect()
    }

    /// Count at a size summed over all nibbles.
    pub fn total(&self, size: usize) -> u64 {
        self.counts
            .iter()
            .filter(|(k, _)| k.0 == size)
            .map(|(_, &c)| c)
            .sum()
    }

    pub fn to_json(&self) -> String {
        let counts = self
            .counts
            .iter()
            .map(|(&(hp, alpha, beta), &count)| NibbledCountJson {
                hp,
                alpha,
                beta,
                count,
            })
            .collect();
        serde_json::to_string(&NibbledCensusJson {
            object: "nibbled",
            counts,
        })
        .expect("serializable")
    }
}

fn paths(east: usize, north: usize, out: &mut Vec<Vec<bool>>, cur: &mut Vec<bool>) {
    if east == 0 && north == 0 {
        out.push(cur.clone());
        return;
    }
    if north > 0 {
        cur.push(true);
        paths(east, north - 1, out, cur);
        cur.pop();
    }
    if east > 0 {
        cur.push(false);
        paths(east - 1, north, out, cur);
        cur.pop();
    }
}

fn only_meet_at_ends(upper: &[bool], lower: &[bool]) -> bool {
    let (mut u, mut l) = ((0i32, 0i32), (0i32, 0i32));
    for i in 0..upper.len() - 1 {
        let step = |p: &mut (i32, i32), north: bool| {
            if north {
                p.1 += 1
            } else {
                p.0 += 1
            }
        };
        step(&mut u, upper[i]);
        step(&mut l, lower[i]);
        if u == l {
            return false;
        }
    }
    true
}

/// Visits every nibbled polygon with measured size at most `max_size` by
/// pairing lattice paths.
pub fn for_each_nibbled(max_size: usize, mut visit: impl FnMut(&NibbledPolygon)) {
    // the smallest possible measure of a polygon with n-step paths is n + 2
    for n in 2..=max_size.saturating_sub(2) {
        for width in 1..n {
            let mut ps = Vec::new();
            paths(width, n - width, &mut ps, &mut Vec::new());
            for upper in ps.iter().filter(|p| p[0] && !p[n - 1]) {
                for lower in ps.iter().filter(|p| !p[0] && p[n - 1]) {
                    if !only_meet_at_ends(upper, lower) {
                        continue;
                    }
                    let mut poly = NibbledPolygon {
                        upper: upper.clone(),
                        lower: lower.clone(),
                        alpha: 0,
                        beta: 0,
                    };
                    let (rv, rh) = (poly.first_vertical_run(), poly.last_horizontal_run());
                    for alpha in 0..rv {
                        for beta in 0..rh {
                            poly.alpha = alpha;
                            poly.beta = beta;
                            if poly.measured_size() <= max_size {
                                visit(&poly);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Census by path pairs.
pub fn count_nibbled(max_size: usize) -> NibbledCensus {
    let mut census = NibbledCensus::new(max_size);
    for_each_nibbled(max_size, |p| {
        census.record(p.measured_size(), p.alpha, p.beta)
    });
    census
}

/// Census by the column representation: each column is an interval
/// `[lo, hi)`, both ends weakly increasing left to right, and neighbouring
/// columns share at least one edge. Independent of the path-pair route.
pub fn count_nibbled_by_columns(max_size: usize) -> NibbledCensus {
    struct Walk<'a> {
        max_size: usize,
        census: &'a mut NibbledCensus,
        first_hi: u32,
    }
    impl Walk<'_> {
        // `columns` so far, last column [lo, hi), `top_run` columns reach hi
        fn grow(&mut self, columns: usize, lo: u32, hi: u32, top_run: u32) {
            let n = columns + hi as usize;
            let unnibbled = 2 * n;
            for alpha in 0..self.first_hi {
                for beta in 0..top_run {
                    let size = unnibbled - alpha as usize - beta as usize;
                    self.census.record(size, alpha, beta);
                }
            }
            let limit = self.max_size.saturating_sub(2);
            for next_lo in lo..hi {
                for next_hi in hi.. {
                    if columns + 1 + next_hi as usize > limit {
                        break;
                    }
                    let run = if next_hi == hi { top_run + 1 } else { 1 };
                    self.grow(columns + 1, next_lo, next_hi, run);
                }
            }
        }
    }
    let mut census = NibbledCensus::new(max_size);
    let limit = max_size.saturating_sub(2);
    for hi in 1.. {
        if 1 + hi as usize > limit {
            break;
        }
        Walk {
            max_size,
            census: &mut census,
            first_hi: hi,
        }
        .grow(1, 0, hi, 1);
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unnibbled_slice_is_catalan() {
        let c = count_nibbled(10);
        assert_eq!(c.count(4, 0, 0), 1);
        assert_eq!(c.count(6, 0, 0), 2);
        assert_eq!(c.count(8, 0, 0), 5);
        assert_eq!(c.count(10, 0, 0), 14);
    }

    #[test]
    fn two_generators_agree() {
        assert_eq!(count_nibbled(11), count_nibbled_by_columns(11));
    }

    #[test]
    fn nibbles_shorten_the_measure() {
        // the 1x2 vertical domino: first vertical run 2, so alpha may be 1
        let c = count_nibbled(6);
        assert_eq!(c.count(5, 1, 0), 1);
        assert_eq!(c.count(5, 0, 1), 1);
        assert_eq!(c.total(4), 1);
    }

    #[test]
    fn json_lists_every_cell() {
        let c = count_nibbled(5);
        assert_eq!(
            c.to_json(),
            r#"{"object":"nibbled","counts":[{"hp":4,"alpha":0,"beta":0,"count":1},{"hp":5,"alpha":0,"beta":1,"count":1},{"hp":5,"alpha":1,"beta":0,"count":1}]}"#
        );
    }
}
