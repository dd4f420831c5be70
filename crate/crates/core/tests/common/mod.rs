#![allow(dead_code)]

use constacyclic::gf::{gcd, DEFAULT_SEED};
use constacyclic::{AlgElem, AlgebraCtx, FieldSpec};
use rand::Rng;

/// Field orders of the sweep matrix.
pub const MATRIX_Q: [u64; 6] = [2, 3, 4, 5, 7, 9];
pub const MATRIX_MAX_N: usize = 15;

pub fn field(q: u64) -> FieldSpec {
    FieldSpec::of_order(q, None, DEFAULT_SEED).expect("prime power")
}

/// Every semisimple `F_q^{γ_λ} C_n` of the matrix, optionally only those
/// with `λ^2 = 1`.
pub fn matrix(involutive_only: bool) -> Vec<AlgebraCtx> {
    let mut out = Vec::new();
    for q in MATRIX_Q {
        let f = field(q);
        for n in 1..=MATRIX_MAX_N {
            if gcd(n as u64, f.p() as u64) != 1 {
                continue;
            }
            for lambda in f.units() {
                let ctx = AlgebraCtx::new(&f, n, lambda).unwrap();
                if !involutive_only || ctx.has_involution() {
                    out.push(ctx);
                }
            }
        }
    }
    out
}

pub fn random_elem(ctx: &AlgebraCtx, rng: &mut impl Rng) -> AlgElem {
    let q = ctx.field().q();
    let coeffs = (0..ctx.n()).map(|_| ctx.field().elem(rng.gen_range(0..q)).unwrap()).collect();
    ctx.elem(coeffs).unwrap()
}
