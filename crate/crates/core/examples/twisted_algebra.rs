//! The twisted group algebra `F_q^{γ_λ} C_n`: products, the involution,
//! the k-Galois form, cocycles and the diagonal isometries between algebras
//! with cohomologous cocycles.

use constacyclic::talg::{apply_isometry, equivalence_witness};
use constacyclic::{AlgebraCtx, CocycleTable, FieldSpec, Result};

fn main() -> Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let ctx = AlgebraCtx::new(&f3, 10, f3.from_int(2))?;
    println!("{ctx}");

    let g = ctx.basis(1);
    let a = ctx.parse("g^9 + 2g + 1")?;
    println!("g * g^9 = {}", g.mul(&ctx.basis(9))?);
    println!("a = {a}\na^2 = {}\na* = {}", a.mul(&a)?, a.star()?);
    let b = ctx.parse("2g^3 + g^2")?;
    println!(
        "[a, b]_0 = {}, coefficient of 1 in a b* = {}",
        f3.format(a.k_galois_form(&b, 0)?),
        f3.format(a.mul(&b.star()?)?.coeff_identity())
    );

    let table = ctx.cocycle_table();
    println!("γ_λ is a 2-cocycle: {}", table.validate_cocycle());
    // δ(1) = 1 keeps the product normalized
    let delta: Vec<_> = (0..10).map(|i| f3.from_int(i % 2 + 1)).collect();
    let twisted = table.product(&CocycleTable::coboundary(&f3, &delta)?)?;
    println!("γ_λ times a coboundary is a 2-cocycle: {}", twisted.validate_cocycle());

    // over GF(7), λ = 1 and β = 6 = -1 differ by a cube, so the cyclic and
    // negacyclic algebras of length 3 are isometric
    let f7 = FieldSpec::prime(7)?;
    let (lambda, beta) = (f7.from_int(1), f7.from_int(6));
    let source = AlgebraCtx::new(&f7, 3, lambda)?;
    let target = AlgebraCtx::new(&f7, 3, beta)?;
    let w = equivalence_witness(&f7, 3, lambda, beta)?.expect("-1 = 3^3 in GF(7)");
    let x = source.parse("g^2 + 3g + 5")?;
    let y = source.parse("4g^2 + 6")?;
    let (ix, iy) = (apply_isometry(&x, w, &target)?, apply_isometry(&y, w, &target)?);
    println!("witness w = {}: {x} -> {ix} (weight {} -> {})", f7.format(w), x.weight(), ix.weight());
    assert_eq!(apply_isometry(&x.mul(&y)?, w, &target)?, ix.mul(&iy)?);
    println!("the isometry is multiplicative");

    println!(
        "GF(3), n = 10: λ = 2 and β = 1 equivalent? {}",
        equivalence_witness(&f3, 10, f3.from_int(2), f3.from_int(1))?.is_some()
    );
    Ok(())
}
