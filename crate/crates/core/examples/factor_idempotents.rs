//! Factor `x^n - λ` and build the primitive idempotents of `F_q[x]/(x^n - λ)`.
//!
//! Usage: `cargo run --example factor_idempotents [q n lambda]`

use constacyclic::discover::IdealLattice;
use constacyclic::{AlgebraCtx, FieldSpec, Result};

fn main() -> Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (q, n, lambda) = match args[..] {
        [q, n, l] => (q, n as usize, l as i64),
        _ => (5, 21, 4),
    };
    let field = FieldSpec::of_order(q, None, constacyclic::gf::DEFAULT_SEED)?;
    let ctx = AlgebraCtx::new(&field, n, field.from_int(lambda))?;
    let lattice = IdealLattice::new(&ctx)?;

    println!("x^{n} - {} over GF({q}) has {} irreducible factors:", field.format(ctx.lambda()), lattice.rank());
    for (i, f) in lattice.factors().iter().enumerate() {
        println!("  f{i} = {f}");
    }
    println!("primitive idempotents:");
    for (i, e) in lattice.primitives().iter().enumerate() {
        assert!(e.is_idempotent());
        println!("  e{i} (dim {}) = {e}", lattice.dimension(1 << i));
    }

    // orthogonality and the partition of unity
    let sum = (0..lattice.len()).last().map(|m| lattice.idempotent(m)).unwrap();
    assert_eq!(sum, ctx.one());
    for (i, a) in lattice.primitives().iter().enumerate() {
        for b in &lattice.primitives()[i + 1..] {
            assert!(a.mul(b)?.is_zero());
        }
    }
    println!("sum of all e_i = 1, e_i e_j = 0 for i != j; {} ideals in total", lattice.len());
    Ok(())
}
