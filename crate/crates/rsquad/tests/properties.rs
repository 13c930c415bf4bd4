//! Randomized invariants: algebraic identities for GF(2) polynomials,
//! recurrence fitting round-trips, and agreement between the closed-form
//! analysis and the brute-force truth-table oracle.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use rsquad::boolfun::TruthTable;
use rsquad::gf2poly::Gf2Poly;
use rsquad::quadform;
use rsquad::recursion::{self, Direction, RecurrenceSpec};
use rsquad::rsq::{RsQuadratic, Semantics};

fn poly_from_bits(bits: u64) -> Gf2Poly {
    let exps: Vec<usize> = (0..64).filter(|i| bits >> i & 1 == 1).collect();
    Gf2Poly::from_exponents(&exps)
}

/// An arbitrary nonzero polynomial of degree < 64.
fn nonzero_poly() -> impl Strategy<Value = Gf2Poly> {
    (1u64..).prop_map(poly_from_bits)
}

/// An arbitrary quadratic with offsets drawn from `1..=max`.
fn quadratic(max: u32) -> impl Strategy<Value = RsQuadratic> {
    (1u32..(1 << max)).prop_map(move |mask| {
        let offsets: Vec<u32> = (0..max).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        RsQuadratic::new(&offsets).unwrap()
    })
}

proptest! {
    #[test]
    fn divrem_reconstructs(a in any::<u64>().prop_map(poly_from_bits), b in nonzero_poly()) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < b.degree().unwrap());
        }
    }

    #[test]
    fn gcd_divides_both_and_is_symmetric(a in nonzero_poly(), b in nonzero_poly()) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
        prop_assert_eq!(g.clone(), b.gcd(&a).unwrap());
        // a common divisor of both divides the gcd
        let c = poly_from_bits(0b111);
        let (ac, bc) = (a.mul(&c), b.mul(&c));
        prop_assert!(ac.gcd(&bc).unwrap().rem(&c).unwrap().is_zero());
    }

    #[test]
    fn unit_multiplicity_is_additive(a in nonzero_poly(), b in nonzero_poly()) {
        let sum = a.unit_multiplicity().unwrap() + b.unit_multiplicity().unwrap();
        prop_assert_eq!(a.mul(&b).unit_multiplicity().unwrap(), sum);
    }

    #[test]
    fn dividing_period_is_minimal(bits in 1u64..(1 << 12)) {
        // restrict to small degree with nonzero constant term so the minimal
        // exponent can be confirmed by direct search
        let p = poly_from_bits(bits | 1);
        prop_assume!(!p.is_one());
        let period = p.dividing_period().unwrap();
        let target = |m: u64| Gf2Poly::monomial(m as usize).add(&Gf2Poly::one());
        prop_assert!(target(period).rem(&p).unwrap().is_zero());
        if period <= 256 {
            for m in 1..period {
                prop_assert!(!target(m).rem(&p).unwrap().is_zero(), "divides x^{m}+1 too");
            }
        }
    }

    #[test]
    fn associated_polynomial_is_palindromic(q in quadratic(8)) {
        let a = q.a_polynomial();
        prop_assert!(a.is_palindromic());
        prop_assert!(a.coeff(0));
        prop_assert_eq!(a.degree(), Some(2 * q.max_offset() as usize));
    }

    #[test]
    fn recurrence_fit_round_trips(
        raw_coeffs in prop::collection::vec(-5i64..=5, 1..=4),
        raw_seed in prop::collection::vec(-9i64..=9, 4),
    ) {
        // the identically-zero sequence admits no fit with a nonzero
        // trailing coefficient (required for backward extension)
        prop_assume!(raw_seed[..raw_coeffs.len()].iter().any(|&s| s != 0));
        let mut coeffs: Vec<BigInt> = raw_coeffs.iter().map(|&c| c.into()).collect();
        let last = coeffs.last_mut().unwrap();
        if last.is_zero() {
            *last = BigInt::from(1);
        }
        let order = coeffs.len();
        let spec = RecurrenceSpec::new(coeffs, 0);
        let seed: Vec<BigInt> = raw_seed[..order].iter().map(|&s| s.into()).collect();
        let mut terms = seed.clone();
        terms.extend(recursion::extend(&spec, &seed, Direction::Forward, 4 * order + 8).unwrap());
        let fitted = recursion::fit_recurrence(&terms, 0).unwrap();
        // the fitted order never exceeds the generating order, and the fit
        // regenerates the sequence exactly
        prop_assert!(fitted.order <= order);
        let back = recursion::extend(
            &fitted,
            &terms[..fitted.order],
            Direction::Forward,
            terms.len() - fitted.order,
        ).unwrap();
        prop_assert_eq!(&terms[fitted.order..], &back[..]);
    }

    #[test]
    fn orbit_tables_are_rotation_invariant_and_plateaued(q in quadratic(4), n in 3usize..=12) {
        let table = TruthTable::from_rs_quadratic(&q, n, Semantics::Orbit).unwrap();
        prop_assert!(table.is_rotation_invariant());
        let spectrum = table.walsh();
        prop_assert!(spectrum.parseval_holds());
        let v = quadform::v_value(&q, n).unwrap();
        prop_assert!(spectrum.is_plateaued_with(v), "q={q} n={n} v={v}");
    }

    #[test]
    fn closed_form_matches_oracle_under_anf(q in quadratic(4), n in 3usize..=12) {
        let report = match quadform::closed_form_report(&q, n, Semantics::Anf) {
            Ok(r) => r,
            Err(_) => return Ok(()), // offsets out of ANF range at this n
        };
        let table = TruthTable::from_rs_quadratic(&q, n, Semantics::Anf).unwrap();
        prop_assert_eq!(report.weight, table.weight() as u128);
        prop_assert_eq!(report.nonlinearity, table.nonlinearity() as u128);
        // the reported plateau parameter describes the actual spectrum
        prop_assert!(table.walsh().is_plateaued_with(report.v), "q={} n={}", q, n);
    }

    #[test]
    fn kernel_dimension_equals_v_value(q in quadratic(4), n in 3usize..=16) {
        let forms = quadform::FormMatrices::new(&q, n, Semantics::Orbit).unwrap();
        let kp = forms.kernel_and_parity();
        prop_assert_eq!(kp.basis.len(), quadform::v_value(&q, n).unwrap());
    }
}
