//! The twisted group algebra `F_q^{γ_λ} C_n`.
//!
//! The basis is `ḡ^0, .., ḡ^{n-1}` with `ḡ^i ḡ^j = γ_λ(i, j) ḡ^{(i+j) mod n}`,
//! where `γ_λ(i, j)` is `λ` when `i + j ≥ n` and `1` otherwise. Multiplication
//! is therefore cyclic convolution with the wrapped terms scaled by `λ`, and
//! the algebra is isomorphic to `F_q[x]/(x^n - λ)` via `ḡ ↦ x`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::poly::Poly;

/// Largest supported group order.
pub const MAX_ORDER: usize = 255;

struct CtxInner {
    field: FieldSpec,
    n: usize,
    lambda: FieldElem,
    lambda_inv: FieldElem,
}

/// `F_q^{γ_λ} C_n`. Cheap to clone and safe to share between threads.
#[derive(Clone)]
pub struct AlgebraCtx(Arc<CtxInner>);

impl PartialEq for AlgebraCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.n == other.0.n && self.0.lambda == other.0.lambda && self.0.field == other.0.field)
    }
}

impl Eq for AlgebraCtx {}

impl fmt::Debug for AlgebraCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgebraCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^(γ_{}) C_{}", self.0.field, self.0.field.format(self.0.lambda), self.0.n)
    }
}

impl AlgebraCtx {
    pub fn new(field: &FieldSpec, n: usize, lambda: FieldElem) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        field.elem(lambda.index())?;
        let ctx = AlgebraCtx(Arc::new(CtxInner { field: field.clone(), n, lambda, lambda_inv: field.inv(lambda)? }));
        // ḡ^n must come out as λ·1
        let g = ctx.from_poly(&Poly::x(field))?;
        let mut acc = ctx.one();
        for _ in 0..n {
            acc = acc.mul(&g)?;
        }
        debug_assert_eq!(acc, ctx.one().scale(lambda));
        Ok(ctx)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.0.field
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn lambda(&self) -> FieldElem {
        self.0.lambda
    }

    /// Whether `λ^2 = 1`, the condition under which `*` is an involution.
    pub fn has_involution(&self) -> bool {
        self.field().mul(self.lambda(), self.lambda()) == FieldElem::ONE
    }

    /// `γ_λ(g^i, g^j)`.
    pub fn gamma(&self, i: usize, j: usize) -> Result<FieldElem> {
        let n = self.n();
        if i >= n || j >= n {
            return Err(Error::ExponentOutOfRange { i, j, n });
        }
        Ok(if i + j >= n { self.lambda() } else { FieldElem::ONE })
    }

    pub fn cocycle_table(&self) -> CocycleTable {
        let n = self.n();
        let values = (0..n).map(|i| (0..n).map(|j| self.gamma(i, j).unwrap()).collect()).collect();
        CocycleTable { field: self.field().clone(), n, values }
    }

    /// `x^n - λ`
    pub fn modulus(&self) -> Poly {
        Poly::xn_minus(self.field(), self.n(), self.lambda())
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem { ctx: self.clone(), coeffs: vec![FieldElem::ZERO; self.n()] }
    }

    pub fn one(&self) -> AlgElem {
        self.basis(0)
    }

    /// `ḡ^i` for `0 ≤ i < n`.
    pub fn basis(&self, i: usize) -> AlgElem {
        let mut e = self.zero();
        e.coeffs[i] = FieldElem::ONE;
        e
    }

    pub fn elem(&self, coeffs: Vec<FieldElem>) -> Result<AlgElem> {
        if coeffs.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), found: coeffs.len() });
        }
        for c in &coeffs {
            self.field().elem(c.index())?;
        }
        Ok(AlgElem { ctx: self.clone(), coeffs })
    }

    /// Element from prime-subfield integers, index i the coefficient of `ḡ^i`.
    pub fn from_ints(&self, coeffs: &[i64]) -> Result<AlgElem> {
        self.elem(coeffs.iter().map(|&c| self.field().from_int(c)).collect())
    }

    /// Image of a polynomial under `x ↦ ḡ`, reduced mod `x^n - λ`.
    pub fn from_poly(&self, poly: &Poly) -> Result<AlgElem> {
        if poly.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let r = poly.rem(&self.modulus())?;
        Ok(AlgElem { ctx: self.clone(), coeffs: r.to_dense(self.n()) })
    }

    /// Parses a sum of terms such as `g^8 + 2g^6 + 2`. Coefficients are
    /// prime-subfield integers or bracketed coordinate lists (`[1,2]g^3`);
    /// `ḡ` is accepted for `g`, and exponents are reduced with `ḡ^n = λ`.
    pub fn parse(&self, text: &str) -> Result<AlgElem> {
        let err = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
        let f = self.field();
        let cleaned: String = text.replace('ḡ', "g").chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = self.zero();
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(out);
        }
        let mut terms = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, ch) in cleaned.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                '+' if depth == 0 => {
                    terms.push(&cleaned[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push(&cleaned[start..]);
        for term in terms {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coef_txt, exp) = match term.find('g') {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| err(&format!("bad exponent in `{term}`")))?
                    };
                    (term[..pos].trim_end_matches('*'), exp)
                }
            };
            let coef = if coef_txt.is_empty() {
                FieldElem::ONE
            } else if let Some(inner) = coef_txt.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                let coords = inner
                    .split(',')
                    .map(|c| c.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err(&format!("bad coordinates in `{term}`")))?;
                f.from_coords(&coords)?
            } else {
                f.from_int(coef_txt.parse::<i64>().map_err(|_| err(&format!("bad coefficient in `{term}`")))?)
            };
            // ḡ^{qn + r} = λ^q ḡ^r
            let wraps = (exp / self.n()) as u64;
            let c = f.mul(coef, f.pow_u64(self.lambda(), wraps));
            let slot = exp % self.n();
            out.coeffs[slot] = f.add(out.coeffs[slot], c);
        }
        Ok(out)
    }
}

/// An element `Σ a_i ḡ^i`, stored densely.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem {
    ctx: AlgebraCtx,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElem({self})")
    }
}

/// Descending powers of `ḡ`, e.g. `ḡ^8 + 2ḡ^6 + ḡ^4 + 2ḡ^2 + 2`.
impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.ctx.field();
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = field.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            terms.push(match (i, c == FieldElem::ONE) {
                (0, _) => cs,
                (1, true) => "ḡ".to_string(),
                (1, false) => format!("{cs}ḡ"),
                (_, true) => format!("ḡ^{i}"),
                (_, false) => format!("{cs}ḡ^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl AlgElem {
    pub fn ctx(&self) -> &AlgebraCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.ctx.field(), self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Hamming weight of the coefficient sequence.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check(&self, other: &AlgElem) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    fn zip(&self, other: &AlgElem, op: impl Fn(FieldElem, FieldElem) -> FieldElem) -> Result<AlgElem> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| op(a, b)).collect();
        Ok(AlgElem { ctx: self.ctx.clone(), coeffs })
    }

    pub fn add(&self, other: &AlgElem) -> Result<AlgElem> {
        let f = self.ctx.field().clone();
        self.zip(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &AlgElem) -> Result<AlgElem> {
        let f = self.ctx.field().clone();
        self.zip(other, |a, b| f.sub(a, b))
    }

    pub fn neg(&self) -> AlgElem {
        let f = self.ctx.field();
        AlgElem { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect() }
    }

    pub fn scale(&self, c: FieldElem) -> AlgElem {
        let f = self.ctx.field();
        AlgElem { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// `(ab)_t = Σ_{i+j ≡ t} a_i b_j γ_λ(i, j)`.
    pub fn mul(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check(other)?;
        let f = self.ctx.field();
        let n = self.ctx.n();
        let lambda = self.ctx.lambda();
        let mut out = vec![FieldElem::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let wrapped = f.mul(a, lambda);
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = i + j;
                if t < n {
                    out[t] = f.add(out[t], f.mul(a, b));
                } else {
                    out[t - n] = f.add(out[t - n], f.mul(wrapped, b));
                }
            }
        }
        Ok(AlgElem { ctx: self.ctx.clone(), coeffs: out })
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).is_ok_and(|sq| &sq == self)
    }

    /// The classical involution `Σ a_i ḡ^i ↦ Σ a_i (ḡ^i)^{-1}`. With
    /// `(ḡ^i)^{-1} = λ^{-1} ḡ^{n-i}` this sends `a_i` to slot `n - i` scaled
    /// by `λ^{-1}` and fixes `a_0`. Only defined when `λ^2 = 1`.
    pub fn star(&self) -> Result<AlgElem> {
        if !self.ctx.has_involution() {
            return Err(Error::InvolutionUndefined);
        }
        let f = self.ctx.field();
        let n = self.ctx.n();
        let li = self.ctx.0.lambda_inv;
        let mut out = vec![FieldElem::ZERO; n];
        out[0] = self.coeffs[0];
        for i in 1..n {
            out[n - i] = f.mul(li, self.coeffs[i]);
        }
        Ok(AlgElem { ctx: self.ctx.clone(), coeffs: out })
    }

    /// `β^{(p^k)} = Σ β_i^{p^k} ḡ^i`.
    pub fn frobenius_twist(&self, k: u32) -> AlgElem {
        let f = self.ctx.field();
        AlgElem { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|&a| f.frobenius(a, k)).collect() }
    }

    /// `[a, b]_k = Σ a_i b_i^{p^k}`; `k = 0` is the Euclidean inner product.
    pub fn k_galois_form(&self, other: &AlgElem, k: u32) -> Result<FieldElem> {
        self.check(other)?;
        let f = self.ctx.field();
        if k >= f.m() {
            return Err(Error::GaloisOutOfRange { k, m: f.m() });
        }
        Ok(f.sum(self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.mul(a, f.frobenius(b, k)))))
    }

    /// Coefficient of `1 = ḡ^0`.
    pub fn coeff_identity(&self) -> FieldElem {
        self.coeffs[0]
    }
}

/// Some unit `a` with `λ = a^n β`, i.e. a diagonal isometry
/// `F_q^{γ_λ} C_n → F_q^{γ_β} C_n`; `None` when the two algebras lie in
/// different classes of `F_q^* / (F_q^*)^n`.
pub fn equivalence_witness(
    field: &FieldSpec,
    n: usize,
    lambda: FieldElem,
    beta: FieldElem,
) -> Result<Option<FieldElem>> {
    if lambda.is_zero() || beta.is_zero() {
        return Err(Error::ZeroLambda);
    }
    field.nth_power_witness(field.div(lambda, beta)?, n as u64)
}

/// Sends `Σ a_i ḡ^i` in `ctx(λ)` to `Σ a_i w^i g̃^i` in `target = ctx(β)`.
pub fn apply_isometry(a: &AlgElem, witness: FieldElem, target: &AlgebraCtx) -> Result<AlgElem> {
    let src = a.ctx();
    let f = src.field();
    if target.field() != f || target.n() != src.n() {
        return Err(Error::CtxMismatch);
    }
    if f.mul(f.pow_u64(witness, src.n() as u64), target.lambda()) != src.lambda() {
        return Err(Error::InvalidWitness);
    }
    let mut w = FieldElem::ONE;
    let coeffs = a
        .coeffs
        .iter()
        .map(|&c| {
            let out = f.mul(c, w);
            w = f.mul(w, witness);
            out
        })
        .collect();
    Ok(AlgElem { ctx: target.clone(), coeffs })
}

/// A function `C_n × C_n → F_q^*` given by its table, entry `(i, j)` the
/// value at `(g^i, g^j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    field: FieldSpec,
    n: usize,
    values: Vec<Vec<FieldElem>>,
}

impl CocycleTable {
    /// Requires a square table of units with row 0 and column 0 all ones.
    pub fn new(field: &FieldSpec, values: Vec<Vec<FieldElem>>) -> Result<Self> {
        let n = values.len();
        let bad = Error::InvalidCocycle;
        if n == 0 || values.iter().any(|row| row.len() != n) {
            return Err(bad("cocycle table must be square and nonempty"));
        }
        if values.iter().flatten().any(|v| v.is_zero() || v.index() >= field.q()) {
            return Err(bad("cocycle values must be units"));
        }
        if (0..n).any(|i| values[0][i] != FieldElem::ONE || values[i][0] != FieldElem::ONE) {
            return Err(bad("cocycle table must be normalized"));
        }
        Ok(CocycleTable { field: field.clone(), n, values })
    }

    pub fn trivial(field: &FieldSpec, n: usize) -> Self {
        CocycleTable { field: field.clone(), n, values: vec![vec![FieldElem::ONE; n]; n] }
    }

    /// `δ(x)δ(y)δ(xy)^{-1}` for `δ: C_n → F_q^*` with `δ(1) = 1`.
    pub fn coboundary(field: &FieldSpec, delta: &[FieldElem]) -> Result<Self> {
        let n = delta.len();
        let mut values = vec![vec![FieldElem::ONE; n]; n];
        for i in 0..n {
            for j in 0..n {
                values[i][j] = field.div(field.mul(delta[i], delta[j]), delta[(i + j) % n])?;
            }
        }
        Self::new(field, values)
    }

    /// Pointwise product of two tables over the same group.
    pub fn product(&self, other: &CocycleTable) -> Result<Self> {
        if self.field != other.field || self.n != other.n {
            return Err(Error::CtxMismatch);
        }
        let f = &self.field;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(r, s)| r.iter().zip(s).map(|(&a, &b)| f.mul(a, b)).collect())
            .collect();
        Ok(CocycleTable { field: f.clone(), n: self.n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.values[i % self.n][j % self.n]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) -> Result<()> {
        if v.is_zero() {
            return Err(Error::InvalidCocycle("cocycle values must be units"));
        }
        self.values[i][j] = v;
        Ok(())
    }

    /// First triple `(x, y, z)` violating `γ(x,y)γ(xy,z) = γ(y,z)γ(x,yz)`.
    pub fn first_violation(&self) -> Option<(usize, usize, usize)> {
        let f = &self.field;
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = (x + y) % n;
                let a = self.values[x][y];
                for z in 0..n {
                    let lhs = f.mul(a, self.values[xy][z]);
                    let rhs = f.mul(self.values[y][z], self.values[x][(y + z) % n]);
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn validate_cocycle(&self) -> bool {
        self.first_violation().is_none()
    }
}
