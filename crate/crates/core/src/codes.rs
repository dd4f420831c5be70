//! Linear and constacyclic codes.
//!
//! A [`LinearCode`] is kept in canonical reduced row-echelon form, so two
//! codes are equal exactly when their generator matrices are. The map
//! `φ(c_0, .., c_{n-1}) = Σ c_i ḡ^i` identifies `F_q^n` with the twisted
//! group algebra, and a code is λ-constacyclic exactly when its image is an
//! ideal of `F_q^{γ_λ} C_n`.
//!
//! The k-Galois dual is obtained from the Euclidean one: since
//! `(Σ a_i b_i^{p^k})^{p^{m-k}} = Σ a_i^{p^{m-k}} b_i`, we have
//! `C^{⊥_k} = (C^{(p^{m-k})})^⊥ = (C^⊥)^{(p^{m-k})}`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{gcd, FieldElem, FieldSpec};
use crate::linalg;
use crate::poly::Poly;
use crate::talg::{AlgElem, AlgebraCtx};

/// Codes with at most this many codewords are enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: f64 = 1e7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Span of `generators`, each of length `n`.
    pub fn new(field: &FieldSpec, n: usize, generators: Vec<Vec<FieldElem>>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: bad.len() });
        }
        let (rows, pivots) = linalg::rref(field, generators, n);
        Ok(LinearCode { field: field.clone(), n, rows, pivots })
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        LinearCode { field: field.clone(), n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &FieldSpec, n: usize) -> Self {
        let rows =
            (0..n).map(|i| (0..n).map(|j| if i == j { FieldElem::ONE } else { FieldElem::ZERO }).collect()).collect();
        LinearCode { field: field.clone(), n, rows, pivots: (0..n).collect() }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// RREF generator rows.
    pub fn rows(&self) -> &[Vec<FieldElem>] {
        &self.rows
    }

    /// Pivot columns of the RREF, an information set.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        v.len() == self.n && linalg::reduce(&self.field, &self.rows, &self.pivots, v).iter().all(|x| x.is_zero())
    }

    /// `Σ m_i row_i`.
    pub fn encode(&self, message: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch { expected: self.k(), found: message.len() });
        }
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; self.n];
        for (&c, row) in message.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, &r) in out.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, r));
            }
        }
        Ok(out)
    }

    fn check(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check(other)?;
        LinearCode::new(&self.field, self.n, self.rows.iter().chain(&other.rows).cloned().collect())
    }

    /// `dim U + dim V - dim(U + V)`.
    pub fn intersection_dim(&self, other: &LinearCode) -> Result<usize> {
        Ok(self.k() + other.k() - self.sum(other)?.k())
    }

    /// Coordinatewise `x ↦ x^{p^j}`.
    pub fn frobenius_image(&self, j: u32) -> LinearCode {
        let f = &self.field;
        let rows = self.rows.iter().map(|r| r.iter().map(|&x| f.frobenius(x, j)).collect()).collect();
        // the image of an RREF matrix is again in RREF
        LinearCode { field: f.clone(), n: self.n, rows, pivots: self.pivots.clone() }
    }

    /// Euclidean dual.
    pub fn euclidean_dual(&self) -> LinearCode {
        let kernel = linalg::null_space(&self.field, &self.rows, &self.pivots, self.n);
        let (rows, pivots) = linalg::rref(&self.field, kernel, self.n);
        LinearCode { field: self.field.clone(), n: self.n, rows, pivots }
    }
}

pub fn weight(v: &[FieldElem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// `φ(c) = Σ c_i ḡ^i`.
pub fn phi(ctx: &AlgebraCtx, v: &[FieldElem]) -> Result<AlgElem> {
    ctx.elem(v.to_vec())
}

pub fn phi_inv(a: &AlgElem) -> Vec<FieldElem> {
    a.coeffs().to_vec()
}

/// `(λ v_{n-1}, v_0, .., v_{n-2})`.
pub fn constacyclic_shift(field: &FieldSpec, lambda: FieldElem, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let Some((&last, head)) = v.split_last() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::with_capacity(v.len());
    out.push(field.mul(lambda, last));
    out.extend_from_slice(head);
    Ok(out)
}

/// Whether the shift by `λ` of each RREF row stays in the code.
pub fn is_lambda_constacyclic(code: &LinearCode, lambda: FieldElem) -> Result<bool> {
    for row in code.rows() {
        if !code.contains(&constacyclic_shift(code.field(), lambda, row)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `ḡ·φ(C) ⊆ φ(C)`, computed with the algebra multiplication.
pub fn is_ideal(code: &LinearCode, ctx: &AlgebraCtx) -> Result<bool> {
    let g = ctx.basis(1 % ctx.n());
    for row in code.rows() {
        if !code.contains(&phi_inv(&g.mul(&phi(ctx, row)?)?)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The principal ideal `⟨a⟩`, spanned by `ḡ^i a` for `0 ≤ i < n`.
pub fn ideal_from_element(ctx: &AlgebraCtx, a: &AlgElem) -> LinearCode {
    let n = ctx.n();
    let g = ctx.basis(1 % n);
    let mut cur = a.clone();
    let mut gens = Vec::with_capacity(n);
    for _ in 0..n {
        gens.push(phi_inv(&cur));
        cur = g.mul(&cur).expect("same algebra");
    }
    LinearCode::new(ctx.field(), n, gens).expect("rows have length n")
}

fn check_code_in(code: &LinearCode, ctx: &AlgebraCtx) -> Result<()> {
    if code.field() != ctx.field() {
        return Err(Error::FieldMismatch);
    }
    if code.n() != ctx.n() {
        return Err(Error::LengthMismatch { expected: ctx.n(), found: code.n() });
    }
    if !is_lambda_constacyclic(code, ctx.lambda())? {
        return Err(Error::NotConstacyclic);
    }
    Ok(())
}

/// Monic `g = gcd(x^n - λ, code polynomials)`, so `φ(C) = ⟨g⟩` and
/// `deg g = n - k`. The zero code gets `x^n - λ`.
pub fn generator_poly(code: &LinearCode, ctx: &AlgebraCtx) -> Result<Poly> {
    check_code_in(code, ctx)?;
    let mut g = ctx.modulus();
    for row in code.rows() {
        g = g.gcd(&Poly::new(ctx.field(), row.clone()))?;
    }
    Ok(g)
}

/// The unique idempotent generating `φ(C)`: with `h = (x^n - λ)/g` and
/// `u g + v h = 1`, it is `e = u g mod (x^n - λ)`.
pub fn idempotent_generator(code: &LinearCode, ctx: &AlgebraCtx) -> Result<AlgElem> {
    let p = ctx.field().p();
    if gcd(ctx.n() as u64, p as u64) != 1 {
        return Err(Error::NotSemisimple { n: ctx.n(), p });
    }
    let g = generator_poly(code, ctx)?;
    let h = ctx.modulus().divmod(&g)?.0;
    let (d, u, _) = g.xgcd(&h)?;
    debug_assert_eq!(d, Poly::one(ctx.field()));
    ctx.from_poly(&u.mul(&g)?)
}

fn check_galois(field: &FieldSpec, k: u32) -> Result<()> {
    if k >= field.m() {
        return Err(Error::GaloisOutOfRange { k, m: field.m() });
    }
    Ok(())
}

/// `C^{⊥_k} = {β : [α, β]_k = 0 for all α ∈ C}`.
pub fn dual(code: &LinearCode, k: u32) -> Result<LinearCode> {
    check_galois(code.field(), k)?;
    let euclid = code.euclidean_dual();
    Ok(if k == 0 { euclid } else { euclid.frobenius_image(code.field().m() - k) })
}

/// `C ∩ C^{⊥_k} = {0}`, decided by dimension count.
pub fn is_lcd(code: &LinearCode, k: u32) -> Result<bool> {
    let d = dual(code, k)?;
    Ok(code.intersection_dim(&d)? == 0)
}

/// Idempotent criterion for `⟨e⟩` to be k-Galois LCD when `λ^2 = 1`:
/// `e* = e` for `k = 0`, `e = e (e^{(p^k)})*` otherwise.
pub fn check_idempotent_lcd(e: &AlgElem, k: u32) -> Result<bool> {
    check_galois(e.ctx().field(), k)?;
    if !e.ctx().has_involution() {
        return Err(Error::InvolutionUndefined);
    }
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    if k == 0 {
        Ok(&e.star()? == e)
    } else {
        Ok(&e.mul(&e.frobenius_twist(k).star()?)? == e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    InfoSet,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::InfoSet => "info-set",
        })
    }
}

/// One completed information-set level: every message of Hamming weight
/// `w` was encoded, after which no unseen codeword has weight below `w + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStat {
    pub w: usize,
    pub messages: u64,
    pub best: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub d: usize,
    pub witness: Vec<FieldElem>,
    pub method: Method,
    /// Messages encoded (up to scalar multiples).
    pub work: u64,
    /// Per-level ledger; empty for exhaustive enumeration.
    pub levels: Vec<LevelStat>,
}

impl DistanceCertificate {
    /// Lower bound implied by the enumeration alone.
    pub fn lower_bound(&self) -> usize {
        match self.method {
            Method::Exhaustive => self.d,
            Method::InfoSet => self.levels.last().map_or(1, |l| l.w + 1),
        }
    }

    /// Checks the witness against `code` and the info-set ledger for consistency.
    pub fn verify(&self, code: &LinearCode) -> bool {
        if !code.contains(&self.witness) || weight(&self.witness) != self.d || self.d == 0 {
            return false;
        }
        match self.method {
            Method::Exhaustive => self.levels.is_empty(),
            Method::InfoSet => {
                let sums_match = self.levels.iter().map(|l| l.messages).sum::<u64>() == self.work;
                let ordered = self.levels.iter().enumerate().all(|(i, l)| l.w == i + 1);
                let monotone = self.levels.windows(2).all(|w| w[1].best <= w[0].best);
                let exact =
                    self.levels.last().is_some_and(|l| l.best == self.d && (l.w + 1 >= self.d || l.w == code.k()));
                sums_match && ordered && monotone && exact
            }
        }
    }
}

/// Partial result of a distance computation stopped by its budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceBounds {
    pub upper: Option<usize>,
    pub witness: Option<Vec<FieldElem>>,
    pub lower: usize,
    pub work: u64,
}

impl fmt::Display for DistanceBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "{} <= d <= {} after {} messages", self.lower, u, self.work),
            None => write!(f, "d >= {} after {} messages", self.lower, self.work),
        }
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Minimum distance with a certificate: exhaustive enumeration when
/// `q^k ≤ 10^7`, information-set enumeration otherwise. `budget` caps the
/// number of messages encoded.
pub fn min_distance(code: &LinearCode, budget: Option<u64>) -> Result<DistanceCertificate> {
    let size = (code.field().q() as f64).powi(code.k() as i32);
    let method = if size <= EXHAUSTIVE_LIMIT { Method::Exhaustive } else { Method::InfoSet };
    min_distance_with(code, method, budget)
}

pub fn min_distance_with(code: &LinearCode, method: Method, budget: Option<u64>) -> Result<DistanceCertificate> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let kernel = Kernel::new(code);
    match method {
        Method::Exhaustive => kernel.exhaustive(budget),
        Method::InfoSet => kernel.info_set(budget),
    }
}

/// Flat scaled copies of the generator rows over small integer indices.
struct Kernel<'a> {
    code: &'a LinearCode,
    q: usize,
    n: usize,
    k: usize,
    /// `scaled[(i * q + c) * n ..][..n]` is `c · row_i`.
    scaled: Vec<u32>,
}

#[derive(Clone)]
struct Best {
    weight: usize,
    word: Vec<u32>,
}

fn better(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.weight < x.weight { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<'a> Kernel<'a> {
    fn new(code: &'a LinearCode) -> Self {
        let f = code.field();
        let (q, n, k) = (f.q() as usize, code.n(), code.k());
        let mut scaled = vec![0u32; k * q * n];
        for (i, row) in code.rows().iter().enumerate() {
            for c in f.elements() {
                let base = (i * q + c.index() as usize) * n;
                for (j, &r) in row.iter().enumerate() {
                    scaled[base + j] = f.mul(c, r).index();
                }
            }
        }
        Kernel { code, q, n, k, scaled }
    }

    #[inline]
    fn row(&self, i: usize, c: u32) -> &[u32] {
        let base = (i * self.q + c as usize) * self.n;
        &self.scaled[base..base + self.n]
    }

    #[inline]
    fn add_into(&self, dst: &mut [u32], src: &[u32], other: &[u32]) {
        let f = self.code.field();
        for ((d, &a), &b) in dst.iter_mut().zip(src).zip(other) {
            *d = f.add(FieldElem::from_raw(a), FieldElem::from_raw(b)).index();
        }
    }

    fn to_elems(&self, word: &[u32]) -> Vec<FieldElem> {
        word.iter().map(|&x| FieldElem::from_raw(x)).collect()
    }

    /// Every nonzero codeword up to scalars: the first nonzero message
    /// coordinate is 1 at position `lead`, the later ones range over GF(q).
    fn exhaustive(&self, budget: Option<u64>) -> Result<DistanceCertificate> {
        let total = ((self.q as f64).powi(self.k as i32) - 1.0) / (self.q as f64 - 1.0);
        if budget.is_some_and(|b| total > b as f64) {
            return Err(Error::BudgetExceeded(DistanceBounds { upper: None, witness: None, lower: 1, work: 0 }));
        }
        let per_lead: Vec<(Option<Best>, u64)> =
            (0..self.k).into_par_iter().map(|lead| self.exhaustive_from(lead)).collect();
        let work = per_lead.iter().map(|(_, w)| w).sum();
        let best = per_lead.into_iter().fold(None, |acc, (b, _)| better(acc, b)).expect("k >= 1");
        Ok(DistanceCertificate {
            d: best.weight,
            witness: self.to_elems(&best.word),
            method: Method::Exhaustive,
            work,
            levels: Vec::new(),
        })
    }

    fn exhaustive_from(&self, lead: usize) -> (Option<Best>, u64) {
        let free = self.k - lead - 1;
        let mut digits = vec![0u32; free];
        let mut word = self.row(lead, 1).to_vec();
        let mut scratch = vec![0u32; self.n];
        let mut best = Best { weight: weight_raw(&word), word: word.clone() };
        let mut work = 1u64;
        let f = self.code.field();
        // odometer over the free coordinates; digit values follow field index order
        'outer: loop {
            let mut pos = 0;
            loop {
                if pos == free {
                    break 'outer;
                }
                let row = lead + 1 + pos;
                let old = digits[pos];
                let new = (old + 1) % self.q as u32;
                // word += (new - old) · row
                let delta = f.sub(FieldElem::from_raw(new), FieldElem::from_raw(old)).index();
                self.add_into(&mut scratch, &word, self.row(row, delta));
                std::mem::swap(&mut word, &mut scratch);
                digits[pos] = new;
                if new != 0 {
                    break;
                }
                pos += 1;
            }
            work += 1;
            let w = weight_raw(&word);
            if w < best.weight {
                best = Best { weight: w, word: word.clone() };
            }
        }
        (Some(best), work)
    }

    /// Single-information-set enumeration over the RREF pivots. Messages of
    /// weight `w` (first nonzero coordinate 1) are encoded level by level;
    /// after level `w` every unseen codeword has weight at least `w + 1`
    /// on the pivots alone, so the search stops once `w + 1 ≥ best`.
    fn info_set(&self, budget: Option<u64>) -> Result<DistanceCertificate> {
        let units = (self.q - 1) as f64;
        let mut best: Option<Best> = None;
        let mut work = 0u64;
        let mut levels = Vec::new();
        for w in 1..=self.k {
            if let Some(b) = &best {
                if w >= b.weight {
                    break;
                }
            }
            let count = binomial(self.k, w) * units.powi(w as i32 - 1);
            if budget.is_some_and(|b| work as f64 + count > b as f64) {
                return Err(Error::BudgetExceeded(DistanceBounds {
                    upper: best.as_ref().map(|b| b.weight),
                    witness: best.map(|b| self.to_elems(&b.word)),
                    lower: w,
                    work,
                }));
            }
            let parts: Vec<(Option<Best>, u64)> =
                (0..self.k).into_par_iter().map(|first| self.level_from(first, w)).collect();
            let level_work: u64 = parts.iter().map(|(_, c)| c).sum();
            for (b, _) in parts {
                best = better(best, b);
            }
            work += level_work;
            let cur = best.as_ref().expect("level 1 always yields a codeword").weight;
            levels.push(LevelStat { w, messages: level_work, best: cur });
        }
        let best = best.expect("k >= 1");
        Ok(DistanceCertificate {
            d: best.weight,
            witness: self.to_elems(&best.word),
            method: Method::InfoSet,
            work,
            levels,
        })
    }

    /// Messages of weight `w` whose lowest support position is `first`.
    fn level_from(&self, first: usize, w: usize) -> (Option<Best>, u64) {
        if self.k - first < w {
            return (None, 0);
        }
        let mut partial = vec![vec![0u32; self.n]; w];
        partial[0].copy_from_slice(self.row(first, 1));
        let mut best = None;
        let mut work = 0;
        self.descend(&mut partial, 1, first, w, &mut best, &mut work);
        (best, work)
    }

    fn descend(
        &self,
        partial: &mut [Vec<u32>],
        depth: usize,
        last: usize,
        w: usize,
        best: &mut Option<Best>,
        work: &mut u64,
    ) {
        if depth == w {
            *work += 1;
            let word = &partial[depth - 1];
            let wt = weight_raw(word);
            if best.as_ref().is_none_or(|b| wt < b.weight) {
                *best = Some(Best { weight: wt, word: word.clone() });
            }
            return;
        }
        let remaining = w - depth;
        for pos in last + 1..=self.k - remaining {
            for c in 1..self.q as u32 {
                let (head, tail) = partial.split_at_mut(depth);
                self.add_into(&mut tail[0], &head[depth - 1], self.row(pos, c));
                self.descend(partial, depth + 1, pos, w, best, work);
            }
        }
    }
}

fn weight_raw(word: &[u32]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}
