//! Arithmetic in GF(p^m).
//!
//! Elements are stored in the polynomial basis relative to a monic
//! irreducible modulus of degree `m`. A [`FieldElem`] packs its coordinate
//! tuple `(c_0, .., c_{m-1})` into the integer `c_0 + c_1 p + .. + c_{m-1} p^{m-1}`,
//! so prime-field elements are just their residues and equality of elements
//! is equality of coordinates. Fields with at most 256 elements get full
//! addition and multiplication tables.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Seed used for modulus search when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed;

const TABLE_LIMIT: u32 = 256;
const INVERSE_TABLE_LIMIT: u32 = 1 << 16;

/// An element of some GF(p^m); only meaningful together with its [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Packed index in `[0, q)`.
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) fn from_raw(index: u32) -> Self {
        FieldElem(index)
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Little-endian, monic, length m + 1.
    modulus: Vec<u32>,
    seed: Option<u64>,
    add: Option<Vec<u32>>,
    mul: Option<Vec<u32>>,
    inv: Option<Vec<u32>>,
}

/// A validated finite field GF(p^m). Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.m, self.0.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.m)
        }
    }
}

/// Wire form of a field: `{p, m, modulus}` with little-endian modulus coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Wire form of an element: a bare integer over a prime field, otherwise
/// the little-endian coordinate list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRepr {
    Prime(u32),
    Coords(Vec<u32>),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q` into `(p, m)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, m))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl FieldSpec {
    /// Builds GF(p^m). When `modulus` is `None` and `m > 1` a monic
    /// irreducible is drawn at random from a generator seeded with
    /// [`DEFAULT_SEED`].
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::with_seed(p, m, modulus, DEFAULT_SEED)
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u64, modulus: Option<&[u32]>, seed: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NonPrime(q))?;
        Self::with_seed(p, m, modulus, seed)
    }

    pub fn with_seed(p: u32, m: u32, modulus: Option<&[u32]>, seed: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrime(p as u64));
        }
        if p > 1 << 16 {
            return Err(Error::PrimeTooLarge(p as u64));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch { expected: 1, found: 0 });
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= 1 << 30).ok_or(Error::FieldTooLarge { p, m })? as u32;
        if m == 1 {
            if let Some(md) = modulus {
                check_modulus_shape(md, p, 1)?;
            }
            return Ok(Self::assemble(p, 1, q, vec![0, 1], None));
        }
        let base = Self::prime(p)?;
        let (modulus, seed) = match modulus {
            Some(md) => {
                check_modulus_shape(md, p, m)?;
                let poly = Poly::new(&base, md.iter().map(|&c| FieldElem(c)).collect());
                if !poly.is_irreducible()? {
                    return Err(Error::ReducibleModulus);
                }
                (md.to_vec(), None)
            }
            None => (random_irreducible(&base, m, seed), Some(seed)),
        };
        Ok(Self::assemble(p, m, q, modulus, seed))
    }

    fn assemble(p: u32, m: u32, q: u32, modulus: Vec<u32>, seed: Option<u64>) -> Self {
        let mut inner = Inner { p, m, q, modulus, seed, add: None, mul: None, inv: None };
        if q <= TABLE_LIMIT {
            let raw =
                FieldSpec(Arc::new(Inner { add: None, mul: None, inv: None, modulus: inner.modulus.clone(), ..inner }));
            let mut add = vec![0; (q * q) as usize];
            let mut mul = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = raw.add_slow(FieldElem(a), FieldElem(b)).0;
                    mul[(a * q + b) as usize] = raw.mul_slow(FieldElem(a), FieldElem(b)).0;
                }
            }
            inner.add = Some(add);
            inner.mul = Some(mul);
        }
        if q <= INVERSE_TABLE_LIMIT {
            let raw = FieldSpec(Arc::new(Inner {
                add: inner.add.clone(),
                mul: inner.mul.clone(),
                inv: None,
                modulus: inner.modulus.clone(),
                ..inner
            }));
            let mut inv = vec![0; q as usize];
            for a in 1..q {
                if inv[a as usize] == 0 {
                    let b = raw.pow_u64(FieldElem(a), (q - 2) as u64).0;
                    inv[a as usize] = b;
                    inv[b as usize] = a;
                }
            }
            inner.inv = Some(inv);
        }
        FieldSpec(Arc::new(inner))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Little-endian monic modulus; `[0, 1]` for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Seed that produced the modulus, if it was searched for.
    pub fn modulus_seed(&self) -> Option<u64> {
        self.0.seed
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.p(), m: self.m(), modulus: self.0.modulus.clone(), seed: self.0.seed }
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        Self::new(d.p, d.m, Some(&d.modulus))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// Validates a packed index.
    pub fn elem(&self, index: u32) -> Result<FieldElem> {
        if index < self.q() {
            Ok(FieldElem(index))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.p() as i64) as u32)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElem> {
        if coords.len() > self.m() as usize {
            return Err(Error::LengthMismatch { expected: self.m() as usize, found: coords.len() });
        }
        let mut acc = 0u32;
        for &c in coords.iter().rev() {
            if c >= self.p() {
                return Err(Error::CoefficientOutOfRange { value: c, p: self.p() });
            }
            acc = acc * self.p() + c;
        }
        Ok(FieldElem(acc))
    }

    /// Little-endian coordinates, always of length m.
    pub fn coords(&self, x: FieldElem) -> Vec<u32> {
        let p = self.p();
        let mut v = x.0;
        (0..self.m())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn to_repr(&self, x: FieldElem) -> ElemRepr {
        if self.m() == 1 {
            ElemRepr::Prime(x.0)
        } else {
            ElemRepr::Coords(self.coords(x))
        }
    }

    pub fn from_repr(&self, r: &ElemRepr) -> Result<FieldElem> {
        match r {
            ElemRepr::Prime(v) if self.m() == 1 => self.from_coords(&[*v]),
            ElemRepr::Prime(v) if *v < self.p() => Ok(FieldElem(*v)),
            ElemRepr::Prime(v) => Err(Error::CoefficientOutOfRange { value: *v, p: self.p() }),
            ElemRepr::Coords(c) => self.from_coords(c),
        }
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q()).map(FieldElem)
    }

    /// The q - 1 units in index order.
    pub fn units(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.q()).map(FieldElem)
    }

    pub fn in_prime_subfield(&self, x: FieldElem) -> bool {
        x.0 < self.p()
    }

    fn add_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p();
        if self.m() == 1 {
            return FieldElem((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut acc, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.m() {
            acc += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FieldElem(acc)
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let p = self.p() as u64;
        if self.m() == 1 {
            return FieldElem((a.0 as u64 * b.0 as u64 % p) as u32);
        }
        let m = self.m() as usize;
        let ca = self.coords(a);
        let cb = self.coords(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let md = &self.0.modulus;
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &mc) in md[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + (p - c) * mc as u64) % p;
            }
            prod[top] = 0;
        }
        let mut acc = 0u64;
        for &c in prod[..m].iter().rev() {
            acc = acc * p + c;
        }
        FieldElem(acc as u32)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.0.add {
            Some(t) => FieldElem(t[(a.0 * self.0.q + b.0) as usize]),
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let p = self.p();
        if self.m() == 1 {
            return FieldElem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let (mut v, mut acc, mut place) = (a.0, 0u32, 1u32);
        while v > 0 {
            acc += ((p - v % p) % p) * place;
            v /= p;
            place = place.wrapping_mul(p);
        }
        FieldElem(acc)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.0.mul {
            Some(t) => FieldElem(t[(a.0 * self.0.q + b.0) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.inv {
            Some(t) => FieldElem(t[a.0 as usize]),
            None => self.pow_u64(a, self.q() as u64 - 2),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow_u64(&self, mut base: FieldElem, mut e: u64) -> FieldElem {
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for any integer exponent; negative exponents go through the inverse.
    pub fn pow(&self, a: FieldElem, e: i64) -> Result<FieldElem> {
        if e >= 0 {
            Ok(self.pow_u64(a, e as u64))
        } else {
            Ok(self.pow_u64(self.inv(a)?, e.unsigned_abs()))
        }
    }

    pub fn sum(&self, it: impl IntoIterator<Item = FieldElem>) -> FieldElem {
        it.into_iter().fold(FieldElem::ZERO, |acc, x| self.add(acc, x))
    }

    /// `x^(p^k)`, with `k` reduced mod m.
    pub fn frobenius(&self, x: FieldElem, k: u32) -> FieldElem {
        let k = k % self.m();
        let mut y = x;
        for _ in 0..k {
            y = self.pow_u64(y, self.p() as u64);
        }
        y
    }

    /// Multiplicative order of a unit.
    pub fn order(&self, x: FieldElem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let group = self.q() as u64 - 1;
        let mut ord = group;
        let mut rest = group;
        let mut d = 2;
        while rest > 1 {
            if rest.is_multiple_of(d) {
                while rest.is_multiple_of(d) {
                    rest /= d;
                }
                while ord.is_multiple_of(d) && self.pow_u64(x, ord / d) == FieldElem::ONE {
                    ord /= d;
                }
            }
            d += 1;
        }
        Ok(ord)
    }

    /// Some unit `a` with `a^n = target`, scanning units in index order.
    pub fn nth_power_witness(&self, target: FieldElem, n: u64) -> Result<Option<FieldElem>> {
        if target.is_zero() {
            return Err(Error::ZeroTarget);
        }
        Ok(self.units().find(|&a| self.pow_u64(a, n) == target))
    }

    /// The quotient `F_q^* / (F_q^*)^n`: the image of the norm map `a -> a^n`
    /// for the trivial action of C_n, its index, and the least element of
    /// each coset.
    pub fn norm_image_classes(&self, n: u64) -> NormClasses {
        let q = self.q() as usize;
        let mut in_image = vec![false; q];
        for a in self.units() {
            in_image[self.pow_u64(a, n).0 as usize] = true;
        }
        let image: Vec<FieldElem> = self.units().filter(|u| in_image[u.0 as usize]).collect();
        let mut covered = vec![false; q];
        let mut representatives = Vec::new();
        for u in self.units() {
            if covered[u.0 as usize] {
                continue;
            }
            representatives.push(u);
            for &i in &image {
                covered[self.mul(u, i).0 as usize] = true;
            }
        }
        NormClasses { count: representatives.len(), representatives, image }
    }

    /// Renders an element; extension-field elements use `a` for the class of x.
    pub fn format(&self, x: FieldElem) -> String {
        if self.m() == 1 {
            return x.0.to_string();
        }
        let terms: Vec<String> = self
            .coords(x)
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormClasses {
    pub count: usize,
    pub representatives: Vec<FieldElem>,
    /// `(F_q^*)^n`, sorted by index.
    pub image: Vec<FieldElem>,
}

fn check_modulus_shape(md: &[u32], p: u32, m: u32) -> Result<()> {
    let found = md.len().saturating_sub(1);
    if found != m as usize || md.last() != Some(&1) {
        return Err(Error::DegreeMismatch { expected: m as usize, found });
    }
    if let Some(&c) = md.iter().find(|&&c| c >= p) {
        return Err(Error::CoefficientOutOfRange { value: c, p });
    }
    Ok(())
}

fn random_irreducible(base: &FieldSpec, m: u32, seed: u64) -> Vec<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = base.p();
    loop {
        let mut coeffs: Vec<u32> = (0..m).map(|_| rng.gen_range(0..p)).collect();
        coeffs.push(1);
        let poly = Poly::new(base, coeffs.iter().map(|&c| FieldElem(c)).collect());
        if poly.is_irreducible().unwrap_or(false) {
            return coeffs;
        }
    }
}
