//! Euclidean and Galois duals of constacyclic codes, and both LCD tests:
//! subspace arithmetic and the idempotent criterion.

use constacyclic::codes::{self, check_idempotent_lcd, dual, ideal_from_element, is_lambda_constacyclic, is_lcd};
use constacyclic::discover::{corollary_applies, IdealLattice};
use constacyclic::{AlgebraCtx, FieldSpec, Result};

fn main() -> Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let ctx = AlgebraCtx::new(&f3, 10, f3.from_int(2))?;
    let e = ctx.parse("g^8 + 2g^6 + g^4 + 2g^2 + 2")?;
    let code = ideal_from_element(&ctx, &e);
    let perp = dual(&code, 0)?;
    let complement = ideal_from_element(&ctx, &ctx.one().sub(&e)?);
    println!("C = <e> is [{}, {}]; C^⊥ = <1 - e>: {}", code.n(), code.k(), perp == complement);
    println!("LCD by subspaces: {}; by e* = e: {}", is_lcd(&code, 0)?, check_idempotent_lcd(&e, 0)?);

    // GF(9): the 1-Galois (Hermitian) dual of a λ-constacyclic code is
    // λ^{-3}-constacyclic
    let f9 = FieldSpec::of_order(9, None, constacyclic::gf::DEFAULT_SEED)?;
    for lambda in f9.units() {
        let ctx = AlgebraCtx::new(&f9, 4, lambda)?;
        let lattice = IdealLattice::new(&ctx)?;
        let dual_const = f9.inv(f9.frobenius(lambda, 1))?;
        let mut lcd = 0;
        for mask in 0..lattice.len() {
            let c = ideal_from_element(&ctx, &lattice.idempotent(mask));
            let d = dual(&c, 1)?;
            assert!(is_lambda_constacyclic(&d, dual_const)?);
            assert_eq!(c.k() + d.k(), 4);
            lcd += usize::from(is_lcd(&c, 1)?);
        }
        println!(
            "GF(9) n=4 λ={:<6} dual constant {:<6} 1-Galois LCD ideals {lcd}/{}{}",
            f9.format(lambda),
            f9.format(dual_const),
            lattice.len(),
            if corollary_applies(&f9, lambda, 1) { "  (every ideal, λ^4 != 1)" } else { "" }
        );
    }

    // a code that is not LCD: the binary simplex code contains its dual's
    // intersection
    let f2 = FieldSpec::prime(2)?;
    let ctx = AlgebraCtx::new(&f2, 7, f2.from_int(1))?;
    let simplex = ideal_from_element(&ctx, &ctx.parse("g^4 + g^2 + g + 1")?);
    println!("binary [7,{}] code LCD: {}", simplex.k(), codes::is_lcd(&simplex, 0)?);
    Ok(())
}
