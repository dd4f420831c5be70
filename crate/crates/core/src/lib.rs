//! Constacyclic codes as ideals of twisted group algebras.
//!
//! A λ-constacyclic code of length `n` over GF(q) is an ideal of
//! `F_q^{γ_λ} C_n`, the group algebra of the cyclic group twisted by the
//! 2-cocycle `γ_λ`. This crate builds those algebras, enumerates their
//! ideals through primitive idempotents, decides Euclidean and k-Galois LCD
//! status both by subspace arithmetic and by idempotent criteria, and
//! certifies minimum distances.
//!
//! ```
//! use constacyclic::{AlgebraCtx, FieldSpec, codes};
//!
//! let f3 = FieldSpec::prime(3)?;
//! let ctx = AlgebraCtx::new(&f3, 10, f3.from_int(2))?;
//! let e = ctx.parse("g^8 + 2g^6 + g^4 + 2g^2 + 2")?;
//! assert!(e.is_idempotent());
//! assert!(codes::check_idempotent_lcd(&e, 0)?);
//! let code = codes::ideal_from_element(&ctx, &e);
//! assert_eq!(code.k(), 8);
//! assert_eq!(codes::min_distance(&code, None)?.d, 2);
//! # Ok::<(), constacyclic::Error>(())
//! ```

pub mod cli;
pub mod codes;
pub mod discover;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod talg;

pub use codes::{DistanceCertificate, LinearCode};
pub use discover::{BestKnownTable, CodeRecord, Verdict};
pub use error::{Error, Result};
pub use gf::{FieldElem, FieldSpec};
pub use poly::Poly;
pub use talg::{AlgElem, AlgebraCtx, CocycleTable};
