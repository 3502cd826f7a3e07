use proptest::prelude::*;

use umbral_ferrers::algebra::{rat, Image, Substitution, TruncSeries};
use umbral_ferrers::umbral::{Pipeline, SeriesOperator, Target, UmbralOperator};

const ORDER: usize = 8;

fn series(arity: usize) -> impl Strategy<Value = TruncSeries> {
    let term = (0..=ORDER, prop::array::uniform3(0u32..4), -5i64..6, 1i64..4);
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        let mut s = TruncSeries::zero(arity, ORDER);
        for (k, mut exps, n, d) in terms {
            for x in exps.iter_mut().skip(arity) {
                *x = 0;
            }
            s.add_term(k, exps, umbral_ferrers::algebra::ratio(n, d));
        }
        s
    })
}

/// Series whose constant term is exactly 1.
fn scalar_unit_series() -> impl Strategy<Value = TruncSeries> {
    series(2).prop_map(|s| {
        let mut out = TruncSeries::one(2, ORDER);
        for (k, e, c) in s.terms() {
            if k > 0 {
                out.add_term(k, *e, c.clone());
            }
        }
        out
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in series(3), b in series(3), c in series(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &TruncSeries::one(3, ORDER), a.clone());
    }

    #[test]
    fn inverse_is_two_sided(s in scalar_unit_series()) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, TruncSeries::one(2, ORDER));
    }

    #[test]
    fn square_root_squares_back(s in scalar_unit_series()) {
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in series(3), b in series(3)) {
        let sub = Substitution::new(1, vec![Image::var(0), Image::t_times_var(0), Image::var(0)]).unwrap();
        let s = |p: &TruncSeries| p.substitute(&sub).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(a.substitute(&Substitution::identity(3)).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in series(3), b in series(3), p in prop::array::uniform3(-4i64..5)) {
        let ev = |s: &TruncSeries| s.eval_at_integers(&p).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
    }

    #[test]
    fn json_round_trip(a in series(3), b in series(1), c in series(0)) {
        for s in [a, b, c] {
            prop_assert_eq!(TruncSeries::from_json(&s.to_json()).unwrap(), s);
        }
    }

    #[test]
    fn operators_are_linear_and_gain_degree(
        idx in 0usize..4, a in series(3), b in series(3), x in -3i64..4, y in -3i64..4,
    ) {
        let op = UmbralOperator::ALL[idx];
        let arity = op.input_arity();
        let fit = |s: &TruncSeries| {
            let mut out = TruncSeries::zero(arity, ORDER);
            for (k, e, c) in s.terms() {
                let mut e = *e;
                for v in e.iter_mut().skip(arity) {
                    *v = 0;
                }
                out.add_term(k, e, c.clone());
            }
            out
        };
        let (a, b) = (fit(&a), fit(&b));
        let combo = &a.scale(&rat(x)) + &b.scale(&rat(y));
        let lhs = op.apply(&combo).unwrap();
        let rhs = &op.apply(&a).unwrap().scale(&rat(x)) + &op.apply(&b).unwrap().scale(&rat(y));
        prop_assert_eq!(lhs, rhs);
        let image = op.apply(&a).unwrap();
        prop_assert_eq!(image.arity(), op.output_arity());
        if let (Some(d), Some(di)) = (a.min_degree(), image.min_degree()) {
            prop_assert!(di >= d + op.t_gain());
        }
    }
}

#[test]
fn pipeline_series_respect_width_bound() {
    let p = Pipeline::new(18);
    for target in Target::ALL {
        p.series(target).unwrap().check_width_bound().unwrap();
    }
}
