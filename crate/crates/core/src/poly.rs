//! Univariate polynomials over GF(q), factorization of `x^n - lambda`, and the
//! primitive idempotents of `F_q[x]/(x^n - lambda)`.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec, DEFAULT_SEED};

/// Dense polynomial, `coeffs[i]` the coefficient of `x^i`; never has a zero
/// leading coefficient, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.field.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    if c != FieldElem::ONE {
                        write!(f, "{cs}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?
                    } else {
                        write!(f, "x^{i}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &FieldSpec) -> Self {
        Poly::constant(field, FieldElem::ONE)
    }

    pub fn constant(field: &FieldSpec, c: FieldElem) -> Self {
        Poly::new(field, vec![c])
    }

    /// `c x^d`
    pub fn monomial(field: &FieldSpec, c: FieldElem, d: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; d + 1];
        coeffs[d] = c;
        Poly::new(field, coeffs)
    }

    pub fn x(field: &FieldSpec) -> Self {
        Poly::monomial(field, FieldElem::ONE, 1)
    }

    /// `x^n - lambda`
    pub fn xn_minus(field: &FieldSpec, n: usize, lambda: FieldElem) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; n + 1];
        coeffs[0] = field.neg(lambda);
        coeffs[n] = FieldElem::ONE;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    /// Coefficients padded or truncated to exactly `len` entries.
    pub fn to_dense(&self, len: usize) -> Vec<FieldElem> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElem::ONE
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Poly::new(f, (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Poly::new(f, (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.field.neg(FieldElem::ONE))
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![FieldElem::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, dc));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Same polynomial scaled to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.lead()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(d, u, v)` with `u self + v other = d` and `d` the monic gcd.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(other)?;
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (quo, r) = r0.divmod(&r1)?;
            let s = s0.sub(&quo.mul(&s1)?)?;
            let t = t0.sub(&quo.mul(&t1)?)?;
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = f.inv(r0.lead())?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(FieldElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            base = base.mul(&base)?.rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.mul(other)?.rem(modulus)
    }

    /// Rabin's test: `f | x^{q^d} - x` and `gcd(f, x^{q^{d/r}} - x) = 1` for
    /// each prime `r | d`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = self.field.q() as u64;
        let x = Poly::x(&self.field);
        let prime_divisors: Vec<usize> = (2..=d).filter(|&r| d % r == 0 && (2..r).all(|s| r % s != 0)).collect();
        // frob[i] = x^{q^i} mod f
        let mut frob = vec![x.rem(&f)?];
        for i in 1..=d {
            let next = frob[i - 1].pow_mod(q, &f)?;
            frob.push(next);
        }
        if frob[d] != x.rem(&f)? {
            return Ok(false);
        }
        for r in prime_divisors {
            let g = frob[d / r].sub(&x)?.gcd(&f)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Distinct monic irreducible factors of a squarefree polynomial, in
    /// canonical order. Randomness in the equal-degree split comes from a
    /// generator seeded with `seed`; the sorted output does not depend on it.
    pub fn factor_squarefree(&self, seed: u64) -> Result<Vec<Poly>> {
        if self.degree().is_none_or(|d| d == 0) {
            return Err(Error::ConstantPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (g, d) in self.monic().distinct_degree()? {
            g.equal_degree(d, &mut rng, &mut out)?;
        }
        out.sort_by(canonical_order);
        Ok(out)
    }

    /// Splits a squarefree monic polynomial into `(product of all irreducible
    /// factors of degree d, d)` blocks.
    fn distinct_degree(&self) -> Result<Vec<(Poly, usize)>> {
        let q = self.field.q() as u64;
        let x = Poly::x(&self.field);
        let mut rest = self.clone();
        let mut h = x.clone();
        let mut blocks = Vec::new();
        let mut d = 1;
        while rest.degree().is_some_and(|dr| dr >= 2 * d) {
            h = h.pow_mod(q, &rest)?;
            let g = h.sub(&x)?.gcd(&rest)?;
            if g.degree().is_some_and(|dg| dg > 0) {
                rest = rest.divmod(&g)?.0;
                h = h.rem(&rest)?;
                blocks.push((g, d));
            }
            d += 1;
        }
        if let Some(dr) = rest.degree().filter(|&dr| dr > 0) {
            blocks.push((rest, dr));
        }
        Ok(blocks)
    }

    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<()> {
        let deg = self.degree().unwrap_or(0);
        if deg == d {
            out.push(self.clone());
            return Ok(());
        }
        let f = &self.field;
        loop {
            let a = Poly::new(f, (0..deg).map(|_| f.elem(rng.gen_range(0..f.q())).unwrap()).collect());
            if a.degree().is_none_or(|da| da == 0) {
                continue;
            }
            let g = a.gcd(self)?;
            let split = if g.degree() != Some(0) { g } else { self.splitting_candidate(&a, d)?.gcd(self)? };
            if split.degree().is_some_and(|ds| ds > 0 && ds < deg) {
                let cofactor = self.divmod(&split)?.0;
                split.equal_degree(d, rng, out)?;
                cofactor.equal_degree(d, rng, out)?;
                return Ok(());
            }
        }
    }

    /// `a^{(q^d - 1)/2} - 1` for odd q, the absolute trace of `a` for even q.
    fn splitting_candidate(&self, a: &Poly, d: usize) -> Result<Poly> {
        let f = &self.field;
        let q = f.q() as u64;
        if f.p() == 2 {
            let mut term = a.rem(self)?;
            let mut acc = term.clone();
            for _ in 1..(f.m() as usize * d) {
                term = term.mul_mod(&term, self)?;
                acc = acc.add(&term)?;
            }
            return Ok(acc);
        }
        // (q^d - 1)/2 = (q - 1)/2 * (1 + q + .. + q^{d-1})
        let mut conj = a.rem(self)?;
        let mut norm = conj.clone();
        for _ in 1..d {
            conj = conj.pow_mod(q, self)?;
            norm = norm.mul_mod(&conj, self)?;
        }
        norm.pow_mod((q - 1) / 2, self)?.sub(&Poly::one(f))
    }
}

/// Degree first, then coefficient sequences compared from the constant term up.
pub fn canonical_order(a: &Poly, b: &Poly) -> Ordering {
    a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| a.coeffs.cmp(&b.coeffs))
}

fn check_semisimple(field: &FieldSpec, n: usize, lambda: FieldElem) -> Result<()> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    if n == 0 || n.is_multiple_of(field.p() as usize) {
        return Err(Error::NotSquarefree { n, p: field.p() });
    }
    Ok(())
}

/// Monic irreducible factors of `x^n - lambda` in canonical order.
pub fn factor_xn_minus_lambda(field: &FieldSpec, n: usize, lambda: FieldElem) -> Result<Vec<Poly>> {
    factor_xn_minus_lambda_seeded(field, n, lambda, DEFAULT_SEED)
}

pub fn factor_xn_minus_lambda_seeded(field: &FieldSpec, n: usize, lambda: FieldElem, seed: u64) -> Result<Vec<Poly>> {
    check_semisimple(field, n, lambda)?;
    Poly::xn_minus(field, n, lambda).factor_squarefree(seed)
}

/// CRT idempotents `e_i = (h_i^{-1} mod f_i) h_i mod (x^n - lambda)` with
/// `h_i = (x^n - lambda)/f_i`, in the order of [`factor_xn_minus_lambda`].
pub fn primitive_idempotents(field: &FieldSpec, n: usize, lambda: FieldElem) -> Result<Vec<Poly>> {
    let factors = factor_xn_minus_lambda(field, n, lambda)?;
    idempotents_from_factors(field, n, lambda, &factors)
}

pub fn idempotents_from_factors(field: &FieldSpec, n: usize, lambda: FieldElem, factors: &[Poly]) -> Result<Vec<Poly>> {
    let modulus = Poly::xn_minus(field, n, lambda);
    factors
        .iter()
        .map(|fi| {
            let hi = modulus.divmod(fi)?.0;
            let (d, u, _) = hi.xgcd(fi)?;
            debug_assert_eq!(d, Poly::one(field));
            u.rem(fi)?.mul_mod(&hi, &modulus)
        })
        .collect()
}
