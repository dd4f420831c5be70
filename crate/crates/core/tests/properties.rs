mod common;

use constacyclic::codes::{self, dual, ideal_from_element, idempotent_generator, is_lambda_constacyclic, is_lcd};
use constacyclic::discover::IdealLattice;
use constacyclic::gf::gcd;
use constacyclic::talg::{apply_isometry, equivalence_witness};
use constacyclic::{AlgebraCtx, FieldSpec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `(ctx, rng)` from indices into the matrix; any `n`, not only coprime ones.
fn ctx_from(qi: usize, n: usize, li: usize, seed: u64) -> (AlgebraCtx, ChaCha8Rng) {
    let f = common::field(common::MATRIX_Q[qi]);
    let units: Vec<_> = f.units().collect();
    let ctx = AlgebraCtx::new(&f, n, units[li % units.len()]).unwrap();
    (ctx, ChaCha8Rng::seed_from_u64(seed))
}

fn semisimple(ctx: &AlgebraCtx) -> bool {
    gcd(ctx.n() as u64, ctx.field().p() as u64) == 1
}

fn arb_ctx() -> impl Strategy<Value = (usize, usize, usize, u64)> {
    (0..common::MATRIX_Q.len(), 1usize..=15, 0usize..8, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_laws((qi, n, li, seed) in arb_ctx()) {
        let (ctx, mut rng) = ctx_from(qi, n, li, seed);
        let a = common::random_elem(&ctx, &mut rng);
        let b = common::random_elem(&ctx, &mut rng);
        let c = common::random_elem(&ctx, &mut rng);
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&ctx.one()).unwrap(), a.clone());
        prop_assert_eq!(a.sub(&a).unwrap(), ctx.zero());
        // the algebra is F_q[x]/(x^n - λ)
        let via_poly = a.to_poly().mul(&b.to_poly()).unwrap();
        prop_assert_eq!(ctx.from_poly(&via_poly).unwrap(), a.mul(&b).unwrap());
    }

    #[test]
    fn form_is_coefficient_of_identity((qi, n, li, seed) in arb_ctx()) {
        let (ctx, mut rng) = ctx_from(qi, n, li, seed);
        prop_assume!(ctx.has_involution());
        let a = common::random_elem(&ctx, &mut rng);
        let b = common::random_elem(&ctx, &mut rng);
        for k in 0..ctx.field().m() {
            let lhs = a.mul(&b.frobenius_twist(k).star().unwrap()).unwrap().coeff_identity();
            prop_assert_eq!(lhs, a.k_galois_form(&b, k).unwrap());
        }
    }

    #[test]
    fn isometry_is_multiplicative_and_keeps_weight((qi, n, li, seed) in arb_ctx(), bi in 0usize..8) {
        let (ctx, mut rng) = ctx_from(qi, n, li, seed);
        let f = ctx.field().clone();
        let units: Vec<_> = f.units().collect();
        let beta = units[bi % units.len()];
        let target = AlgebraCtx::new(&f, n, beta).unwrap();
        match equivalence_witness(&f, n, ctx.lambda(), beta).unwrap() {
            Some(w) => {
                let a = common::random_elem(&ctx, &mut rng);
                let b = common::random_elem(&ctx, &mut rng);
                let (ia, ib) = (apply_isometry(&a, w, &target).unwrap(), apply_isometry(&b, w, &target).unwrap());
                prop_assert_eq!(ia.weight(), a.weight());
                prop_assert_eq!(apply_isometry(&a.mul(&b).unwrap(), w, &target).unwrap(), ia.mul(&ib).unwrap());
            }
            None => {
                // λ/β outside the n-th powers: no unit works
                let q = f.div(ctx.lambda(), beta).unwrap();
                prop_assert!(f.units().all(|w| f.pow_u64(w, n as u64) != q));
            }
        }
    }

    #[test]
    fn proper_ideals_have_one_constant((qi, n, li, seed) in arb_ctx()) {
        let (ctx, mut rng) = ctx_from(qi, n, li, seed);
        prop_assume!(semisimple(&ctx));
        let lattice = IdealLattice::new(&ctx).unwrap();
        let mask = rand::Rng::gen_range(&mut rng, 0..lattice.len());
        let code = ideal_from_element(&ctx, &lattice.idempotent(mask));
        let proper = code.k() > 0 && code.k() < n;
        for beta in ctx.field().units() {
            let cc = is_lambda_constacyclic(&code, beta).unwrap();
            // {0} and the full space are constacyclic for every constant
            prop_assert_eq!(cc, !proper || beta == ctx.lambda());
        }
    }

    #[test]
    fn dual_constant_and_dimension((qi, n, li, seed) in arb_ctx()) {
        let (ctx, mut rng) = ctx_from(qi, n, li, seed);
        prop_assume!(semisimple(&ctx));
        let f = ctx.field();
        let lattice = IdealLattice::new(&ctx).unwrap();
        let mask = rand::Rng::gen_range(&mut rng, 0..lattice.len());
        let code = ideal_from_element(&ctx, &lattice.idempotent(mask));
        for k in 0..f.m() {
            let d = dual(&code, k).unwrap();
            prop_assert_eq!(code.k() + d.k(), n);
            let constant = f.inv(f.pow_u64(ctx.lambda(), (f.p() as u64).pow(f.m() - k))).unwrap();
            prop_assert!(is_lambda_constacyclic(&d, constant).unwrap());
            // the dual is the annihilator under the form
            for row in code.rows() {
                let a = codes::phi(&ctx, row).unwrap();
                for drow in d.rows() {
                    let form = f.sum(row.iter().zip(drow).map(|(&x, &y)| f.mul(x, f.frobenius(y, k))));
                    prop_assert!(form.is_zero());
                    if ctx.has_involution() {
                        let b = codes::phi(&ctx, drow).unwrap();
                        prop_assert_eq!(a.k_galois_form(&b, k).unwrap(), form);
                    }
                }
            }
        }
    }

    #[test]
    fn idempotent_generators_are_unique((qi, n, li, seed) in arb_ctx()) {
        let (ctx, mut rng) = ctx_from(qi, n, li, seed);
        prop_assume!(semisimple(&ctx));
        let lattice = IdealLattice::new(&ctx).unwrap();
        let mask = rand::Rng::gen_range(&mut rng, 0..lattice.len());
        let e = lattice.idempotent(mask);
        let code = ideal_from_element(&ctx, &e);
        prop_assert_eq!(idempotent_generator(&code, &ctx).unwrap(), e.clone());
        prop_assert_eq!(lattice.mask_of(&e), Some(mask));
        prop_assert_eq!(code.k(), lattice.dimension(mask));
        // any generator of the same ideal yields the same idempotent
        let multiple = e.mul(&common::random_elem(&ctx, &mut rng)).unwrap();
        let sub = ideal_from_element(&ctx, &multiple);
        prop_assert!(sub.k() <= code.k());
        if sub.k() == code.k() {
            prop_assert_eq!(idempotent_generator(&sub, &ctx).unwrap(), e);
        }
    }

    #[test]
    fn complementary_pairs((qi, n, li, seed) in arb_ctx()) {
        let (ctx, mut rng) = ctx_from(qi, n, li, seed);
        prop_assume!(semisimple(&ctx) && ctx.has_involution());
        let lattice = IdealLattice::new(&ctx).unwrap();
        let mask = rand::Rng::gen_range(&mut rng, 0..lattice.len());
        let e = lattice.idempotent(mask);
        let f = ctx.one().sub(&e).unwrap();
        let (ce, cf) = (ideal_from_element(&ctx, &e), ideal_from_element(&ctx, &f));
        for k in 0..ctx.field().m() {
            prop_assert_eq!(is_lcd(&ce, k).unwrap(), is_lcd(&cf, k).unwrap());
        }
        // C^⊥ = <1 - e*>, which is <1 - e> exactly when C is LCD
        let perp = dual(&ce, 0).unwrap();
        prop_assert_eq!(&perp, &ideal_from_element(&ctx, &ctx.one().sub(&e.star().unwrap()).unwrap()));
        prop_assert_eq!(perp == cf, is_lcd(&ce, 0).unwrap());
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative(qi in 0..common::MATRIX_Q.len(), a in 0u32..9, b in 0u32..9) {
        let f: FieldSpec = common::field(common::MATRIX_Q[qi]);
        let (a, b) = (f.elem(a % f.q()).unwrap(), f.elem(b % f.q()).unwrap());
        for k in 0..=f.m() {
            prop_assert_eq!(f.frobenius(f.add(a, b), k), f.add(f.frobenius(a, k), f.frobenius(b, k)));
            prop_assert_eq!(f.frobenius(f.mul(a, b), k), f.mul(f.frobenius(a, k), f.frobenius(b, k)));
        }
        prop_assert_eq!(f.frobenius(a, f.m()), a);
    }
}
