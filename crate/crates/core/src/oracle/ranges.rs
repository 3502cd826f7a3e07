//! Second counting strategy: dynamic programming over the operator
//! summation ranges, measuring shapes by height and width statistics
//! instead of edge counts.

use std::collections::HashMap;

use crate::umbral::Target;

type Counts = HashMap<(usize, u32), u64>;

/// Counts indexed by half-perimeter `0..=max_hp`.
pub fn count_by_ranges(target: Target, max_hp: usize) -> Vec<u64> {
    let mut out = vec![0u64; max_hp + 1];
    // (height, top width) layers of plain diagrams
    let mut ferrers: Vec<Counts> = vec![HashMap::new(); max_hp + 1];
    for a in 1..max_hp as u32 {
        ferrers[1].insert((1, a), 1);
    }
    for h in 1..max_hp {
        let layer: Vec<_> = ferrers[h].iter().map(|(&k, &v)| (k, v)).collect();
        for ((_, a), n) in layer {
            let mut b = a;
            while h + 1 + b as usize <= max_hp {
                *ferrers[h + 1].entry((h + 1, b)).or_insert(0) += n;
                b += 1;
            }
        }
    }
    if target == Target::Ferrers {
        for layer in &ferrers {
            for (&(h, a), &n) in layer {
                out[h + a as usize] += n;
            }
        }
        return out;
    }

    // gated: (height, depth, left, gap, right) keyed by height layer
    type GateKey = (usize, usize, u32, u32, u32);
    let width = |k: &GateKey| k.2 + k.3 + k.4;
    let hp_gated = |k: &GateKey| k.0 + width(k) as usize + k.1;
    let mut gated: Vec<HashMap<GateKey, u64>> = vec![HashMap::new(); max_hp + 1];
    for (h, layer) in ferrers.iter().enumerate() {
        for (&(_, a), &n) in layer {
            for b1 in 1..a.saturating_sub(1) {
                for b2 in 1..a - b1 {
                    let mut b3 = a - b1 - b2;
                    loop {
                        let key = (h + 1, 1, b1, b2, b3);
                        if hp_gated(&key) > max_hp {
                            break;
                        }
                        *gated[h + 1].entry(key).or_insert(0) += n;
                        b3 += 1;
                    }
                }
            }
        }
    }
    for h in 1..max_hp {
        let layer: Vec<_> = gated[h].iter().map(|(&k, &v)| (k, v)).collect();
        for ((_, depth, b1, b2, b3), n) in layer {
            for c2 in b2..b2 + b3 {
                let mut c3 = b2 + b3 - c2;
                loop {
                    let key = (h + 1, depth + 1, b1, c2, c3);
                    if hp_gated(&key) > max_hp {
                        break;
                    }
                    *gated[h + 1].entry(key).or_insert(0) += n;
                    c3 += 1;
                }
            }
        }
    }
    if target == Target::Gated {
        for layer in &gated {
            for (k, &n) in layer {
                out[hp_gated(k)] += n;
            }
        }
        return out;
    }

    // wicketed: (height, top width, hole height, hole top width)
    type WicketKey = (usize, u32, usize, u32);
    let hp_wicketed = |k: &WicketKey| k.0 + k.1 as usize + k.2 + k.3 as usize;
    let mut wicketed: Vec<HashMap<WicketKey, u64>> = vec![HashMap::new(); max_hp + 1];
    for (h, layer) in gated.iter().enumerate() {
        for (k, &n) in layer {
            let mut a = width(k);
            loop {
                let key = (h + 1, a, k.1, k.3);
                if hp_wicketed(&key) > max_hp {
                    break;
                }
                *wicketed[h + 1].entry(key).or_insert(0) += n;
                a += 1;
            }
        }
    }
    for h in 1..max_hp {
        let layer: Vec<_> = wicketed[h].iter().map(|(&k, &v)| (k, v)).collect();
        for ((_, a, depth, gap), n) in layer {
            let mut b = a;
            loop {
                let key = (h + 1, b, depth, gap);
                if hp_wicketed(&key) > max_hp {
                    break;
                }
                *wicketed[h + 1].entry(key).or_insert(0) += n;
                b += 1;
            }
        }
    }
    for layer in &wicketed {
        for (k, &n) in layer {
            out[hp_wicketed(k)] += n;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_ferrers, count_gated, count_wicketed};

    #[test]
    fn agrees_with_recursive_generation() {
        assert_eq!(
            count_by_ranges(Target::Ferrers, 14),
            count_ferrers(14).counts()
        );
        assert_eq!(count_by_ranges(Target::Gated, 12), count_gated(12).counts());
        assert_eq!(
            count_by_ranges(Target::Wicketed, 12),
            count_wicketed(12).counts()
        );
    }
}
