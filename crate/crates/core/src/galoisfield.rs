//! Prime and prime-power finite fields, multiplicative orders, and
//! factorization of integer polynomials modulo p.
//!
//! A field is presented as `F_p[x]/(g)` for a monic irreducible `g`; elements
//! are canonical coefficient vectors of length `< deg g`, so equality is
//! representation equality. Group orders are computed against the exact
//! factorization of `q−1` (trial division with a configurable bound), never
//! against a partial one: when the bound is insufficient the operation
//! returns [`GfError::FactorBound`] instead of guessing.

use crate::polyarith::IntPoly;
use crate::primes::{self, FactorBoundExceeded, DEFAULT_FACTOR_BOUND};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("defining factor is reducible mod {p}: contains factor {witness}")]
    ReducibleFactor { p: u64, witness: String },
    #[error("defining factor must be nonconstant with unit leading coefficient mod p")]
    InvalidFactor,
    #[error("field size {p}^{d} does not fit the supported range")]
    FieldTooLarge { p: u64, d: usize },
    #[error("zero element has no multiplicative order")]
    ZeroElement,
    #[error(transparent)]
    FactorBound(#[from] FactorBoundExceeded),
}

/// Dense polynomial over F_p. Coefficients canonical in `[0, p)`, trailing
/// zeros trimmed (zero polynomial = empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        FpPoly::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn from_int_poly(poly: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        FpPoly::new(
            p,
            poly.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().unwrap())
                .collect(),
        )
    }

    /// Lift to ℤ[x] with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (primes::mul_mod(acc, x % p, p) + c) % p;
        }
        acc
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(
            self.p,
            (0..n).map(|i| (self.coeff(i) + rhs.coeff(i)) % self.p).collect(),
        )
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - rhs.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self) -> FpPoly {
        FpPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect(),
        )
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + primes::mul_mod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        FpPoly::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| primes::mul_mod(a, c % self.p, self.p))
                .collect(),
        )
    }

    pub fn make_monic(&self) -> FpPoly {
        match self.leading() {
            0 => self.clone(),
            1 => self.clone(),
            l => self.scale(inv_mod(l, self.p)),
        }
    }

    pub fn div_rem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.degree() < divisor.degree() {
            return (FpPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        let inv_lead = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = primes::mul_mod(rem[k + dd], inv_lead, p);
            if q == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let t = primes::mul_mod(q, b, p);
                rem[k + j] = (rem[k + j] + p - t) % p;
            }
            quot[k] = q;
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.div_rem(divisor).1
    }

    pub fn exact_div(&self, divisor: &FpPoly) -> FpPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s·self + t·rhs = g`, g monic.
    pub fn extended_gcd(&self, rhs: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let p = self.p;
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = FpPoly::one(p);
        let mut s1 = FpPoly::zero(p);
        let mut t0 = FpPoly::zero(p);
        let mut t1 = FpPoly::one(p);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.p);
        }
        FpPoly::new(
            self.p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| primes::mul_mod(c, (i as u64 + 1) % self.p, self.p))
                .collect(),
        )
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u128, modulus: &FpPoly) -> FpPoly {
        let mut base = self.rem(modulus);
        let mut acc = FpPoly::one(self.p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            exp >>= 1;
        }
        acc
    }

    /// p-th root of a polynomial in `x^p` (coefficients are Frobenius-fixed
    /// in F_p, so this just decimates exponents).
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        let mut out = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                out.push(c);
            } else {
                debug_assert_eq!(c, 0, "pth_root on polynomial not in x^p");
            }
        }
        FpPoly::new(self.p, out)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    primes::pow_mod(a, p - 2, p)
}

/// Element of a finite field: canonical coefficient vector of length `< d`
/// over F_p, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFElement {
    coeffs: Vec<u64>,
}

impl FFElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
}

/// `F_{p^d} = F_p[x]/(g)` for `g` monic irreducible of degree `d`.
pub struct FiniteField {
    p: u64,
    factor: FpPoly,
    degree: usize,
    q: u64,
    factor_bound: u64,
    unit_factors: OnceLock<Result<Vec<(u64, u32)>, FactorBoundExceeded>>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("factor", &self.factor)
            .field("q", &self.q)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.factor == other.factor
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    /// Build `F_p[x]/(factor)`. Verifies that `p` is prime and that the
    /// factor is irreducible mod p (normalized monic).
    pub fn new(p: u64, factor: &IntPoly) -> Result<Arc<FiniteField>, GfError> {
        FiniteField::with_factor_bound(p, factor, DEFAULT_FACTOR_BOUND)
    }

    pub fn with_factor_bound(
        p: u64,
        factor: &IntPoly,
        factor_bound: u64,
    ) -> Result<Arc<FiniteField>, GfError> {
        if !primes::is_prime(p) {
            return Err(GfError::CompositeModulus(p));
        }
        let reduced = FpPoly::from_int_poly(factor, p);
        let expected_deg = factor.degree();
        if reduced.degree().is_none()
            || reduced.degree() == Some(0)
            || reduced.degree() != expected_deg
        {
            return Err(GfError::InvalidFactor);
        }
        let g = reduced.make_monic();
        FiniteField::from_fp_factor(g, factor_bound)
    }

    pub(crate) fn from_fp_factor(
        g: FpPoly,
        factor_bound: u64,
    ) -> Result<Arc<FiniteField>, GfError> {
        let p = g.modulus();
        if let Some(witness) = reducibility_witness(&g) {
            return Err(GfError::ReducibleFactor {
                p,
                witness: witness.to_string(),
            });
        }
        let degree = g.degree().unwrap();
        let mut q: u64 = 1;
        for _ in 0..degree {
            q = q
                .checked_mul(p)
                .filter(|&v| v < (1 << 62))
                .ok_or(GfError::FieldTooLarge { p, d: degree })?;
        }
        Ok(Arc::new(FiniteField {
            p,
            factor: g,
            degree,
            q,
            factor_bound,
            unit_factors: OnceLock::new(),
        }))
    }

    /// The prime field F_p itself.
    pub fn prime_field(p: u64) -> Result<Arc<FiniteField>, GfError> {
        FiniteField::new(p, &IntPoly::from_i64(&[0, 1]))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn defining_factor(&self) -> &FpPoly {
        &self.factor
    }

    pub fn zero(&self) -> FFElement {
        FFElement { coeffs: vec![] }
    }

    pub fn one(&self) -> FFElement {
        FFElement { coeffs: vec![1] }
    }

    pub fn from_u64(&self, n: u64) -> FFElement {
        self.element(vec![n % self.p])
    }

    pub fn from_int(&self, n: &BigInt) -> FFElement {
        let r = n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap();
        self.element(vec![r])
    }

    /// Canonical element from arbitrary coefficients (reduced mod factor).
    pub fn element(&self, coeffs: Vec<u64>) -> FFElement {
        let poly = FpPoly::new(self.p, coeffs).rem(&self.factor);
        FFElement {
            coeffs: poly.coeffs,
        }
    }

    fn as_poly(&self, a: &FFElement) -> FpPoly {
        FpPoly::new(self.p, a.coeffs.clone())
    }

    pub fn add(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let s = self.as_poly(a).add(&self.as_poly(b));
        FFElement { coeffs: s.coeffs }
    }

    pub fn sub(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let s = self.as_poly(a).sub(&self.as_poly(b));
        FFElement { coeffs: s.coeffs }
    }

    pub fn neg(&self, a: &FFElement) -> FFElement {
        let s = self.as_poly(a).neg();
        FFElement { coeffs: s.coeffs }
    }

    pub fn mul(&self, a: &FFElement, b: &FFElement) -> FFElement {
        let s = self.as_poly(a).mul(&self.as_poly(b)).rem(&self.factor);
        FFElement { coeffs: s.coeffs }
    }

    /// Extended Euclid on representatives.
    pub fn inv(&self, a: &FFElement) -> Result<FFElement, GfError> {
        if a.is_zero() {
            return Err(GfError::ZeroElement);
        }
        let (g, s, _) = self.as_poly(a).extended_gcd(&self.factor);
        debug_assert!(g.is_one());
        let s = s.rem(&self.factor);
        Ok(FFElement { coeffs: s.coeffs })
    }

    pub fn pow(&self, a: &FFElement, mut exp: u128) -> FFElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn minus_one(&self) -> FFElement {
        self.from_u64(self.p - 1)
    }

    /// Fixed enumeration order: index written base p, little-endian digits
    /// as coefficients. Index 0 is zero, index 1 is one.
    pub fn element_from_index(&self, mut idx: u64) -> FFElement {
        debug_assert!(idx < self.q);
        let mut coeffs = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            coeffs.push(idx % self.p);
            idx /= self.p;
        }
        self.element(coeffs)
    }

    /// Prime factorization of `q − 1`, cached.
    pub fn unit_group_factors(&self) -> Result<&[(u64, u32)], GfError> {
        let res = self
            .unit_factors
            .get_or_init(|| primes::trial_factor(self.q - 1, self.factor_bound));
        match res {
            Ok(v) => Ok(v),
            Err(e) => Err(GfError::FactorBound(e.clone())),
        }
    }

    /// Least `k ≥ 1` with `a^k = 1`.
    pub fn mult_order(&self, a: &FFElement) -> Result<u64, GfError> {
        if a.is_zero() {
            return Err(GfError::ZeroElement);
        }
        let factors = self.unit_group_factors()?.to_vec();
        let mut order = self.q - 1;
        debug_assert!(self.pow(a, order as u128).is_one());
        for (r, e) in factors {
            for _ in 0..e {
                if order % r == 0 && self.pow(a, (order / r) as u128).is_one() {
                    order /= r;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }

    /// `a` has multiplicative order exactly `n` (no factorization of q−1
    /// needed, only of `n`).
    pub fn has_order(&self, a: &FFElement, n: u64) -> Result<bool, GfError> {
        if a.is_zero() {
            return Err(GfError::ZeroElement);
        }
        if !self.pow(a, n as u128).is_one() {
            return Ok(false);
        }
        for (r, _) in primes::trial_factor(n, self.factor_bound)? {
            if self.pow(a, (n / r) as u128).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Deterministic element of exact multiplicative order `n`: the first
    /// element in the fixed enumeration order that works. `None` iff
    /// `n ∤ q−1`.
    pub fn element_of_order(&self, n: u64) -> Result<Option<FFElement>, GfError> {
        assert!(n >= 1);
        if (self.q - 1) % n != 0 {
            return Ok(None);
        }
        let n_factors = primes::trial_factor(n, self.factor_bound)?;
        'next: for idx in 1..self.q {
            let a = self.element_from_index(idx);
            if !self.pow(&a, n as u128).is_one() {
                continue;
            }
            for &(r, _) in &n_factors {
                if self.pow(&a, (n / r) as u128).is_one() {
                    continue 'next;
                }
            }
            return Ok(Some(a));
        }
        Ok(None)
    }

    pub fn format_element(&self, a: &FFElement) -> String {
        self.as_poly(a).to_string()
    }
}

/// A nontrivial monic factor when `g` is reducible over F_p, else `None`.
fn reducibility_witness(g: &FpPoly) -> Option<FpPoly> {
    let p = g.modulus();
    let d = g.degree().unwrap();
    if d == 1 {
        return None;
    }
    let x = FpPoly::x(p);
    // x^{p^k} mod g for k = 1..d
    let mut frob = x.clone();
    let mut powers = Vec::with_capacity(d);
    for _ in 0..d {
        frob = frob.pow_mod(p as u128, g);
        powers.push(frob.clone());
    }
    // x^{p^d} must equal x
    if powers[d - 1] != x.rem(g) {
        // some factor of degree < d exists; find one via the smallest k
        for (k, h) in powers.iter().enumerate() {
            let w = h.sub(&x).gcd(g);
            if w.degree().map_or(false, |dw| dw >= 1) && w.degree() != Some(d) {
                return Some(w);
            }
            let _ = k;
        }
        // fall back: g divides no x^{p^k}−x cleanly; report g itself as composite
        return Some(g.clone());
    }
    // proper subfield check: gcd(x^{p^{d/l}} − x, g) must be 1 for prime l | d
    for l in crate::polyarith::divisors(d as u64) {
        let l = l as usize;
        if l == d || !primes::is_prime((d / l) as u64) {
            continue;
        }
        let w = powers[l - 1].sub(&x).gcd(g);
        if w.degree().map_or(false, |dw| dw >= 1) {
            return Some(w);
        }
    }
    None
}

/// Complete factorization of `poly mod p` into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients). The leading unit is
/// dropped. If the reduction is constant, the list is empty.
///
/// Distinct-degree splitting followed by Cantor–Zassenhaus equal-degree
/// splitting with a generator seeded from `(p, poly)`, so runs are
/// reproducible.
pub fn ff_poly_factor(poly: &IntPoly, p: u64) -> Result<Vec<(FpPoly, u32)>, GfError> {
    if !primes::is_prime(p) {
        return Err(GfError::CompositeModulus(p));
    }
    let reduced = FpPoly::from_int_poly(poly, p);
    if reduced.degree().map_or(true, |d| d == 0) {
        return Ok(vec![]);
    }
    let monic = reduced.make_monic();
    let mut rng = seeded_rng(p, poly);
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (product, deg) in distinct_degree_split(&part) {
            for irr in equal_degree_split(&product, deg, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort();
    // merge duplicates (cannot occur, parts are coprime; defensive sort only)
    debug_assert!({
        let mut check = FpPoly::one(p);
        for (f, m) in &out {
            for _ in 0..*m {
                check = check.mul(f);
            }
        }
        check == monic
    });
    Ok(out)
}

fn seeded_rng(p: u64, poly: &IntPoly) -> ChaCha8Rng {
    let mut seed: u64 = 0x46494e51_u64; // domain tag
    seed = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(p);
    for c in poly.coeffs() {
        let h = c.mod_floor(&BigInt::from(u64::MAX)).to_u64().unwrap_or(0);
        seed = (seed ^ h).wrapping_mul(0x9e3779b97f4a7c15);
    }
    ChaCha8Rng::seed_from_u64(seed)
}

/// Char-p squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let mut result = Vec::new();
    let mut f = f.clone();
    let mut e: u32 = 1;
    loop {
        if f.degree().map_or(true, |d| d == 0) {
            break;
        }
        let fd = f.derivative();
        if fd.is_zero() {
            f = f.pth_root();
            e = e
                .checked_mul(u32::try_from(p).expect("p fits u32 for x^p inputs"))
                .expect("multiplicity overflow");
            continue;
        }
        let mut g = f.gcd(&fd);
        let mut w = f.exact_div(&g);
        let mut i: u32 = 1;
        while !w.is_one() {
            let y = w.gcd(&g);
            let z = w.exact_div(&y);
            if !z.is_one() {
                result.push((z, i * e));
            }
            g = g.exact_div(&y);
            w = y;
            i += 1;
        }
        f = g;
    }
    result
}

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree k, k).
fn distinct_degree_split(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = x.rem(&f);
    let mut k = 0usize;
    while f.degree().map_or(false, |d| d >= 1) {
        k += 1;
        if f.degree().unwrap() < 2 * k {
            out.push((f.clone(), f.degree().unwrap()));
            break;
        }
        h = h.pow_mod(p as u128, &f);
        let g = h.sub(&x).gcd(&f);
        if g.degree().map_or(false, |d| d >= 1) {
            f = f.exact_div(&g);
            h = h.rem(&f);
            out.push((g, k));
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting: `f` monic squarefree, all
/// irreducible factors of degree `k`.
fn equal_degree_split(f: &FpPoly, k: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let p = f.modulus();
    let d = f.degree().unwrap();
    if d == k {
        return vec![f.clone()];
    }
    loop {
        let a = random_poly(p, d, rng);
        if a.degree().map_or(true, |da| da == 0) {
            continue;
        }
        let g1 = a.gcd(f);
        if g1.degree().map_or(false, |dg| dg >= 1 && dg < d) {
            let rest = f.exact_div(&g1);
            let mut out = equal_degree_split(&g1, k, rng);
            out.extend(equal_degree_split(&rest, k, rng));
            return out;
        }
        let b = if p == 2 {
            // trace map over F_2: a + a^2 + a^4 + … + a^{2^{k−1}}
            let mut t = a.clone();
            let mut c = a.clone();
            for _ in 1..k {
                c = c.mul(&c).rem(f);
                t = t.add(&c);
            }
            t
        } else {
            let qk = (p as u128)
                .checked_pow(k as u32)
                .expect("p^k fits in u128");
            a.pow_mod((qk - 1) / 2, f).sub(&FpPoly::one(p))
        };
        let g = b.gcd(f);
        if g.degree().map_or(false, |dg| dg >= 1 && dg < d) {
            let rest = f.exact_div(&g);
            let mut out = equal_degree_split(&g, k, rng);
            out.extend(equal_degree_split(&rest, k, rng));
            return out;
        }
    }
}

fn random_poly(p: u64, max_deg: usize, rng: &mut ChaCha8Rng) -> FpPoly {
    let coeffs = (0..max_deg).map(|_| rng.next_u64() % p).collect();
    FpPoly::new(p, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::IntPoly;

    fn int(p: &[i64]) -> IntPoly {
        IntPoly::from_i64(p)
    }

    #[test]
    fn make_prime_and_extension_fields() {
        let f7 = FiniteField::new(7, &int(&[-3, 1])).unwrap();
        assert_eq!(f7.q(), 7);
        assert_eq!(f7.degree(), 1);

        // -3 is a quadratic non-residue mod 11, so x²+3 is irreducible
        let f121 = FiniteField::new(11, &int(&[3, 0, 1])).unwrap();
        assert_eq!(f121.q(), 121);
        assert_eq!(f121.degree(), 2);

        assert!(matches!(
            FiniteField::new(6, &int(&[0, 1])),
            Err(GfError::CompositeModulus(6))
        ));
        assert!(matches!(
            FiniteField::new(7, &int(&[-1, 0, 1])),
            Err(GfError::ReducibleFactor { .. })
        ));
    }

    #[test]
    fn field_arithmetic_basics() {
        let f = FiniteField::new(11, &int(&[3, 0, 1])).unwrap();
        let x = f.element(vec![0, 1]);
        let x2 = f.mul(&x, &x);
        assert_eq!(x2, f.from_u64(8)); // x² = −3 = 8
        let inv = f.inv(&x).unwrap();
        assert!(f.mul(&x, &inv).is_one());
        // a^(q−1) = 1 for a handful of elements
        for idx in 1..f.q() {
            let a = f.element_from_index(idx);
            assert!(f.pow(&a, (f.q() - 1) as u128).is_one());
        }
    }

    #[test]
    fn mult_orders_in_f7() {
        let f = FiniteField::prime_field(7).unwrap();
        assert_eq!(f.mult_order(&f.from_u64(1)).unwrap(), 1);
        assert_eq!(f.mult_order(&f.from_u64(3)).unwrap(), 6);
        assert_eq!(f.mult_order(&f.from_u64(2)).unwrap(), 3);
        assert!(matches!(
            f.mult_order(&f.zero()),
            Err(GfError::ZeroElement)
        ));
    }

    #[test]
    fn order_divides_group_order_exhaustive() {
        for (p, fac) in [(13u64, vec![0i64, 1]), (5, vec![2, 0, 1]), (3, vec![1, 2, 0, 1])] {
            let f = FiniteField::new(p, &int(&fac)).unwrap();
            for idx in 1..f.q() {
                let a = f.element_from_index(idx);
                let ord = f.mult_order(&a).unwrap();
                assert_eq!((f.q() - 1) % ord, 0);
                assert!(f.pow(&a, ord as u128).is_one());
                assert!(f.has_order(&a, ord).unwrap());
            }
        }
    }

    #[test]
    fn element_of_order_spec_cases() {
        let f7 = FiniteField::prime_field(7).unwrap();
        assert_eq!(f7.element_of_order(8).unwrap(), None);
        assert_eq!(f7.element_of_order(1).unwrap(), Some(f7.one()));
        let f17 = FiniteField::prime_field(17).unwrap();
        assert_eq!(f17.element_of_order(8).unwrap(), Some(f17.from_u64(2)));
    }

    #[test]
    fn element_of_order_iff_divides() {
        for q_spec in [(31u64, vec![0i64, 1]), (7, vec![3, 0, 1])] {
            let f = FiniteField::new(q_spec.0, &int(&q_spec.1)).unwrap();
            for n in 1..=f.q() {
                let got = f.element_of_order(n).unwrap();
                if (f.q() - 1) % n == 0 {
                    let a = got.expect("order must be realized");
                    assert_eq!(f.mult_order(&a).unwrap(), n);
                } else {
                    assert!(got.is_none());
                }
            }
        }
    }

    #[test]
    fn factor_spec_examples() {
        // x²+3 mod 7 = (x+2)(x+5)  i.e. roots 5 and 2
        let fs = ff_poly_factor(&int(&[3, 0, 1]), 7).unwrap();
        assert_eq!(
            fs,
            vec![
                (FpPoly::new(7, vec![2, 1]), 1),
                (FpPoly::new(7, vec![5, 1]), 1)
            ]
        );
        // x²−x+1 irreducible mod 11
        let fs = ff_poly_factor(&int(&[1, -1, 1]), 11).unwrap();
        assert_eq!(fs, vec![(FpPoly::new(11, vec![1, 10, 1]), 1)]);
        // x²−x+1 = (x+1)² mod 3
        let fs = ff_poly_factor(&int(&[1, -1, 1]), 3).unwrap();
        assert_eq!(fs, vec![(FpPoly::new(3, vec![1, 1]), 2)]);
        assert!(matches!(
            ff_poly_factor(&int(&[1, 1]), 10),
            Err(GfError::CompositeModulus(10))
        ));
    }

    #[test]
    fn factor_remultiplies_and_is_irreducible() {
        let polys = [
            int(&[1, 0, 0, 0, 1]),        // x⁴+1
            int(&[-1, 0, 0, 0, 0, 0, 1]), // x⁶−1
            int(&[2, 3, 0, 1, 5, 1]),
            int(&[0, 0, 1]), // x²
        ];
        for p in [2u64, 3, 5, 7, 13, 31] {
            for poly in &polys {
                let fs = ff_poly_factor(poly, p).unwrap();
                let mut prod = FpPoly::one(p);
                for (f, m) in &fs {
                    assert!(f.is_monic());
                    assert!(
                        reducibility_witness(f).is_none(),
                        "factor {f} of {poly} mod {p} reducible"
                    );
                    for _ in 0..*m {
                        prod = prod.mul(f);
                    }
                }
                let expect = FpPoly::from_int_poly(poly, p).make_monic();
                assert_eq!(prod, expect, "poly {poly} mod {p}");
            }
        }
    }

    #[test]
    fn factor_deterministic() {
        let poly = int(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]); // x⁸−1
        let a = ff_poly_factor(&poly, 17).unwrap();
        let b = ff_poly_factor(&poly, 17).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 8); // splits completely: 17 ≡ 1 mod 8
    }

    #[test]
    fn factor_bound_surfaces() {
        // q−1 = 2·500000...: pick p where p−1 has a huge semiprime part.
        // 2147483659 is prime and (p−1)/2 = 1073741829 = 3 * 357913943, and
        // 357913943 = 11 * 32537631.18... — instead construct directly:
        // p = 2·1009·1013·1019 + 1? Just test the trial_factor pathway via
        // a tiny bound on a field whose q−1 needs larger primes.
        let f = FiniteField::with_factor_bound(1_000_003, &int(&[0, 1]), 2).unwrap();
        // 1_000_002 = 2 * 3 * 166667, and 166667 is prime → fine even with
        // bound 2 thanks to the primality fallback. Force failure with a
        // composite cofactor: q−1 = 1000002 has prime cofactor, so use
        // mult_order on a field where (q−1)/2^k is composite with factors
        // above the bound: p = 10403·2+1? Use p = 62501 = 2^2*5^6 + 1?
        // Simplest: p = 1009*1013 is composite, so take p with
        // p−1 = 2^2 * 251 * 257: p = 1032029? 4*251*257+1 = 258029.
        assert!(primes::is_prime(258_029));
        let f2 = FiniteField::with_factor_bound(258_029, &int(&[0, 1]), 10).unwrap();
        let a = f2.from_u64(2);
        assert!(matches!(
            f2.mult_order(&a),
            Err(GfError::FactorBound(_))
        ));
        let _ = f;
    }
}
