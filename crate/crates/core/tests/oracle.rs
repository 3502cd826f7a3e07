use umbral_ferrers::algebra::rat;
use umbral_ferrers::oracle::{
    count_by_ranges, count_ferrers, count_gated, count_wicketed, for_each_gated, CellGrid,
    FerrersShape, GateRow, Parts,
};
use umbral_ferrers::umbral::{pipeline, Target};

#[test]
fn totals_match_series() {
    for (target, max) in [
        (Target::Ferrers, 18),
        (Target::Gated, 13),
        (Target::Wicketed, 13),
    ] {
        let series = pipeline(target, max).unwrap().specialize_to_one();
        let counts = match target {
            Target::Ferrers => count_ferrers(max).counts().to_vec(),
            Target::Gated => count_gated(max).counts().to_vec(),
            Target::Wicketed => count_wicketed(max).counts().to_vec(),
        };
        for (h, &n) in counts.iter().enumerate() {
            assert_eq!(series.scalar_coeff(h), rat(n as i64), "{target} h={h}");
        }
    }
}

#[test]
fn gated_refined_by_top_row() {
    let max = 12;
    let phi = pipeline(Target::Gated, max).unwrap();
    let census = count_gated(max);
    let mut seen = 0;
    for (&(h, g), &n) in census.refined() {
        assert_eq!(
            phi.coeff(h).coeff(&[g.left, g.gap, g.right]),
            rat(n as i64),
            "h={h} {g}"
        );
        seen += 1;
    }
    let monomials: usize = (0..=max).map(|k| phi.coeff(k).len()).sum();
    assert_eq!(seen, monomials);
}

#[test]
fn wicketed_refined_by_top_width() {
    let max = 12;
    let psi = pipeline(Target::Wicketed, max).unwrap();
    for (&(h, a), &n) in count_wicketed(max).refined() {
        assert_eq!(psi.coeff(h).coeff(&[a]), rat(n as i64), "h={h} a={a}");
    }
}

#[test]
fn range_dynamic_programming_matches_drawing() {
    assert_eq!(
        count_by_ranges(Target::Ferrers, 20),
        count_ferrers(20).counts()
    );
    assert_eq!(count_by_ranges(Target::Gated, 14), count_gated(14).counts());
    assert_eq!(
        count_by_ranges(Target::Wicketed, 14),
        count_wicketed(14).counts()
    );
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(count_gated(12), count_gated(12));
    let mut first = Vec::new();
    for_each_gated(10, |p, h| first.push((p.base.to_vec(), p.gate.to_vec(), h)));
    let mut second = Vec::new();
    for_each_gated(10, |p, h| {
        second.push((p.base.to_vec(), p.gate.to_vec(), h))
    });
    assert_eq!(first, second);
}

/// Gates whose left post may widen by one cell per row. The series only
/// describes gates with a constant left post.
type Visit<'a> = &'a mut dyn FnMut(&[u32], &[GateRow], usize);

fn relaxed_gated(max_hp: usize, visit: Visit<'_>) {
    fn grow(base: &[u32], gate: &mut Vec<GateRow>, max_hp: usize, visit: Visit<'_>) {
        let hp = Parts {
            base,
            gate,
            above: &[],
        }
        .grid()
        .half_perimeter();
        if hp <= max_hp {
            visit(base, gate, hp);
        }
        let top = *gate.last().unwrap();
        let span = top.gap + top.right;
        for left in top.left..=top.left + 1 {
            for gap in top.gap..span {
                for right in (span - gap).max(1)..=max_hp as u32 {
                    let row = GateRow::new(left, gap, right);
                    if base.len() + gate.len() + 1 + row.width() as usize + gate.len() + 1 > max_hp
                    {
                        break;
                    }
                    gate.push(row);
                    grow(base, gate, max_hp, visit);
                    gate.pop();
                }
            }
        }
    }
    let mut bases: Vec<Vec<u32>> = Vec::new();
    umbral_ferrers::oracle::for_each_ferrers(max_hp, |rows, _| bases.push(rows.to_vec()));
    for base in bases {
        let a = *base.last().unwrap();
        for left in 1..a.saturating_sub(1) {
            for gap in 1..a - left {
                for right in a - left - gap..=max_hp as u32 {
                    let row = GateRow::new(left, gap, right);
                    if base.len() + 1 + row.width() as usize + 1 > max_hp {
                        break;
                    }
                    let mut gate = vec![row];
                    grow(&base, &mut gate, max_hp, visit);
                }
            }
        }
    }
}

#[test]
fn shifted_left_posts_are_not_counted() {
    let max = 11;
    let series = pipeline(Target::Gated, max).unwrap().specialize_to_one();
    let mut constant = vec![0i64; max + 1];
    let mut shifted = vec![0i64; max + 1];
    relaxed_gated(max, &mut |base, gate, hp| {
        assert!(FerrersShape::new(base.to_vec()).is_ok());
        if gate.iter().all(|g| g.left == gate[0].left) {
            constant[hp] += 1;
        } else {
            shifted[hp] += 1;
        }
    });
    for (h, &n) in constant.iter().enumerate() {
        assert_eq!(series.scalar_coeff(h), rat(n), "h={h}");
    }
    assert!(shifted.iter().sum::<i64>() > 0);
}

#[test]
fn ring_half_perimeter_from_edges() {
    let g = Parts {
        base: &[3],
        gate: &[GateRow::new(1, 1, 1)],
        above: &[3],
    }
    .grid();
    assert_eq!(g.boundary_edges(), 16);
    assert_eq!(g.half_perimeter(), 8);
    let _: &CellGrid = &g;
}
