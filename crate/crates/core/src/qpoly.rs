//! Dense integer polynomials in `q`, the q-analogs built from them, and exact
//! evaluation at roots of unity.
//!
//! A value `f(ξ^d)` with `ξ` a primitive `m`-th root of unity is computed by
//! reducing `f` modulo the cyclotomic polynomial `Φ_o`, `o = m / gcd(m, d)`.
//! The residue is an integer exactly when it is a constant.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Params;

/// Polynomial in `q` with arbitrary precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^deg`
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `q^deg`
    pub fn q_pow(deg: usize) -> Self {
        Self::monomial(1, deg)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `f(1)`
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divide by `q^k`, or `None` if some exponent would go negative.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.low_degree()? < k {
            return None;
        }
        Some(IntPoly { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder for a divisor with leading coefficient `±1`.
    ///
    /// Panics on a zero divisor or a non-unit leading coefficient.
    pub fn div_rem(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = &d.coeffs[dd];
        assert!(lead.abs().is_one(), "divisor must have leading coefficient ±1");
        let neg = lead.is_negative();
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + dd]);
            if c.is_zero() {
                continue;
            }
            let c = if neg { -c } else { c };
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient; panics if the remainder is nonzero.
    ///
    /// Used for q-analogs with a `[m]_q`-type denominator, where a remainder
    /// can only mean a transcription error in a formula.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division: ({self}) / ({d}) leaves {r}");
        q
    }

    /// Reduce exponents modulo `m`, i.e. work modulo `q^m - 1`.
    pub fn fold(&self, m: usize) -> IntPoly {
        assert!(m > 0);
        if self.coeffs.len() <= m {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i % m] += c;
        }
        Self::from_coeffs(out)
    }

    fn div_one_minus_q_pow(&self, m: usize) -> IntPoly {
        // p = (1 - q^m) r  gives  r_j = p_j + r_{j-m}
        let len = self.coeffs.len();
        if len == 0 {
            return Self::zero();
        }
        assert!(len > m, "inexact division by 1 - q^{m}");
        let mut r = vec![BigInt::zero(); len - m];
        for j in 0..r.len() {
            let mut v = self.coeffs[j].clone();
            if j >= m {
                v += &r[j - m];
            }
            r[j] = v;
        }
        for j in r.len()..len {
            let mut v = self.coeffs[j].clone();
            if j >= m && j - m < r.len() {
                v += &r[j - m];
            }
            assert!(v.is_zero(), "inexact division by 1 - q^{m}");
        }
        Self::from_coeffs(r)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign<IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: IntPoly) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

impl Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a IntPoly> for IntPoly {
    fn sum<I: Iterator<Item = &'a IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| a + b)
    }
}

// ---------------------------------------------------------------------------
// integer helpers

/// Ordinary binomial coefficient, zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn catalan(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// `Nar(n,k) = C(n,k) C(n,k-1) / n`, with `Nar(0,0) = 1`.
pub fn narayana(n: i64, k: i64) -> BigInt {
    if n == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if n < 0 || k < 1 || k > n {
        return BigInt::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / BigInt::from(n)
}

/// Motzkin numbers by the three-term recurrence.
pub fn motzkin(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let n = n as usize;
    let mut m = vec![BigInt::one(), BigInt::one()];
    for i in 2..=n {
        let a = BigInt::from(2 * i + 1) * &m[i - 1] + BigInt::from(3 * i - 3) * &m[i - 2];
        m.push(a / BigInt::from(i + 2));
    }
    m.swap_remove(n)
}

// ---------------------------------------------------------------------------
// q-analogs

/// `[n]_q = 1 + q + ... + q^{n-1}`; zero for `n <= 0`.
pub fn q_int(n: i64) -> IntPoly {
    if n <= 0 {
        return IntPoly::zero();
    }
    IntPoly::from_coeffs(vec![BigInt::one(); n as usize])
}

pub fn q_factorial(n: i64) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, i| acc * q_int(i))
}

/// Gaussian binomial coefficient, zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> IntPoly {
    if n < 0 || k < 0 || k > n {
        return IntPoly::zero();
    }
    let k = k.min(n - k);
    let mut acc = IntPoly::one();
    for i in 0..k {
        let top = IntPoly::one() - IntPoly::q_pow((n - i) as usize);
        acc = (acc * top).div_one_minus_q_pow((i + 1) as usize);
    }
    acc
}

/// q-multinomial coefficient; `None` unless the parts are nonnegative and sum to `n`.
pub fn q_multinomial(n: i64, parts: &[i64]) -> Option<IntPoly> {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return None;
    }
    let mut rest = n;
    let mut acc = IntPoly::one();
    for &p in parts {
        acc = acc * q_binomial(rest, p);
        rest -= p;
    }
    Some(acc)
}

fn mobius(mut n: u64) -> i32 {
    let mut res = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if n > 1 {
        res = -res;
    }
    res
}

/// The cyclotomic polynomial `Φ_d`.
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let factor = IntPoly::q_pow(e as usize) - IntPoly::one();
        match mobius(d / e) {
            1 => num = num * factor,
            -1 => den = den * factor,
            _ => {}
        }
    }
    num.div_exact(&den)
}

/// Value of a polynomial at a root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootValue {
    Integer(#[serde(with = "bigint_string")] BigInt),
    /// The residue modulo `Φ_o` is not a constant.
    NonInteger(IntPoly),
}

/// `f(ξ^d)` for a primitive `m`-th root of unity `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOfUnityValue {
    pub order: u64,
    pub exponent: i64,
    pub value: RootValue,
}

impl RootOfUnityValue {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.value {
            RootValue::Integer(v) => Some(v),
            RootValue::NonInteger(_) => None,
        }
    }

    /// Multiplicative order of `ξ^d`.
    pub fn reduced_order(&self) -> u64 {
        reduced_order(self.order, self.exponent)
    }
}

impl fmt::Display for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootValue::Integer(v) => write!(f, "{v}"),
            RootValue::NonInteger(r) => write!(f, "non-integer [{r}]"),
        }
    }
}

pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Order of `ξ^d` where `ξ` has order `m`.
pub fn reduced_order(m: u64, d: i64) -> u64 {
    assert!(m >= 1);
    let r = d.rem_euclid(m as i64) as u64;
    m / m.gcd(&r)
}

/// Residue of `f` modulo `Φ_o`, i.e. `f` evaluated at a primitive `o`-th root.
pub fn eval_at_primitive(f: &IntPoly, o: u64) -> RootValue {
    let folded = f.fold(o as usize);
    let (_, rem) = folded.div_rem(&cyclotomic(o));
    match rem.degree() {
        None => RootValue::Integer(BigInt::zero()),
        Some(0) => RootValue::Integer(rem.coeffs[0].clone()),
        Some(_) => RootValue::NonInteger(rem),
    }
}

/// `f(ξ^d)` for `ξ` a primitive `m`-th root of unity.
pub fn eval_at_root(f: &IntPoly, m: u64, d: i64) -> RootOfUnityValue {
    let o = reduced_order(m, d);
    RootOfUnityValue { order: m, exponent: d, value: eval_at_primitive(f, o) }
}

/// `qbinom(n,k)` at a primitive `o`-th root of unity through the q-Lucas
/// factorisation `C(n₁,k₁) · qbinom(n₀,k₀)(ξ)`.
pub fn q_lucas_eval(n: u64, k: u64, o: u64) -> RootOfUnityValue {
    assert!(o >= 1);
    let (n1, n0) = (n / o, n % o);
    let (k1, k0) = (k / o, k % o);
    let outer = binomial(n1 as i64, k1 as i64);
    let inner = eval_at_primitive(&q_binomial(n0 as i64, k0 as i64), o);
    let value = match inner {
        RootValue::Integer(v) => RootValue::Integer(outer * v),
        RootValue::NonInteger(r) => {
            if outer.is_zero() {
                RootValue::Integer(BigInt::zero())
            } else {
                RootValue::NonInteger(r.scale(&outer))
            }
        }
    };
    RootOfUnityValue { order: o, exponent: 1, value }
}

/// True iff the coefficients between the lowest and highest nonzero terms
/// read the same in both directions. The zero polynomial counts as palindromic.
pub fn is_palindromic(f: &IntPoly) -> bool {
    let (Some(lo), Some(hi)) = (f.low_degree(), f.degree()) else {
        return true;
    };
    let c = &f.coeffs[lo..=hi];
    c.iter().eq(c.iter().rev())
}

// ---------------------------------------------------------------------------
// named polynomials

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("{id}: parameters out of domain ({reason})")]
    OutOfDomain { id: &'static str, reason: String },
    #[error("unknown polynomial id `{0}`")]
    UnknownId(String),
    #[error(transparent)]
    Param(#[from] crate::ParamError),
}

/// Registry of the named q-polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedPoly {
    /// q-Catalan `qbinom(2n,n) / [n+1]`.
    Cat { n: i64 },
    /// q-Narayana `q^{k(k-1)} / [n] · qbinom(n,k) qbinom(n,k-1)`.
    Nar { n: i64, k: i64 },
    CatB { n: i64 },
    NarB { n: i64, k: i64 },
    /// Peak-major-index polynomial of paths with depth at most `s`.
    Xns { n: i64, s: i64 },
    /// Major-index polynomial of paths with depth at most `s`.
    Yns { n: i64, s: i64 },
    /// Major index over two-row tableaux with `k` cyclic descents.
    GCdes { n: i64, k: i64 },
    /// Major index over binary words in `BW(2n,n)` with `k` cyclic descents.
    Qbw { n: i64, k: i64 },
    Qncc { n: i64, e: i64, l: i64 },
    /// Fails cyclic sieving; kept as a negative control.
    Qnccb { n: i64, e: i64, l: i64 },
    /// `[t^k]` of the type B block polynomial.
    PiBCoeff { n: i64, k: i64 },
    NarBPaired { n: i64, k: i64 },
    Unk { n: i64, k: i64 },
    TriEar { n: i64, k: i64 },
    TwistCat { n: i64 },
    AbCandidateSn { n: i64, k: i64 },
    MarkedNcm { n: i64, k: i64, r: i64 },
    SchurInterp { n: i64, k: i64, s: i64 },
}

pub const NAMED_POLY_IDS: &[&str] = &[
    "CAT",
    "NAR",
    "CATB",
    "NARB",
    "X_NS",
    "Y_NS",
    "G_CDES",
    "QBW",
    "QNCC",
    "QNCCB",
    "PI_B_COEFF",
    "NARB_PAIRED",
    "U_NK",
    "TRI_EAR",
    "TWIST_CAT",
    "AB_CANDIDATE_SN",
    "MARKED_NCM",
    "SCHUR_INTERP",
];

impl NamedPoly {
    pub fn id(&self) -> &'static str {
        match self {
            NamedPoly::Cat { .. } => "CAT",
            NamedPoly::Nar { .. } => "NAR",
            NamedPoly::CatB { .. } => "CATB",
            NamedPoly::NarB { .. } => "NARB",
            NamedPoly::Xns { .. } => "X_NS",
            NamedPoly::Yns { .. } => "Y_NS",
            NamedPoly::GCdes { .. } => "G_CDES",
            NamedPoly::Qbw { .. } => "QBW",
            NamedPoly::Qncc { .. } => "QNCC",
            NamedPoly::Qnccb { .. } => "QNCCB",
            NamedPoly::PiBCoeff { .. } => "PI_B_COEFF",
            NamedPoly::NarBPaired { .. } => "NARB_PAIRED",
            NamedPoly::Unk { .. } => "U_NK",
            NamedPoly::TriEar { .. } => "TRI_EAR",
            NamedPoly::TwistCat { .. } => "TWIST_CAT",
            NamedPoly::AbCandidateSn { .. } => "AB_CANDIDATE_SN",
            NamedPoly::MarkedNcm { .. } => "MARKED_NCM",
            NamedPoly::SchurInterp { .. } => "SCHUR_INTERP",
        }
    }

    pub fn from_id(id: &str, p: &Params) -> Result<Self, PolyError> {
        let id = id.to_ascii_uppercase();
        Ok(match id.as_str() {
            "CAT" => NamedPoly::Cat { n: p.get("n")? },
            "NAR" => NamedPoly::Nar { n: p.get("n")?, k: p.get("k")? },
            "CATB" => NamedPoly::CatB { n: p.get("n")? },
            "NARB" => NamedPoly::NarB { n: p.get("n")?, k: p.get("k")? },
            "X_NS" => NamedPoly::Xns { n: p.get("n")?, s: p.get("s")? },
            "Y_NS" => NamedPoly::Yns { n: p.get("n")?, s: p.get("s")? },
            "G_CDES" => NamedPoly::GCdes { n: p.get("n")?, k: p.get("k")? },
            "QBW" => NamedPoly::Qbw { n: p.get("n")?, k: p.get("k")? },
            "QNCC" => NamedPoly::Qncc { n: p.get("n")?, e: p.get("e")?, l: p.get("l")? },
            "QNCCB" => NamedPoly::Qnccb { n: p.get("n")?, e: p.get("e")?, l: p.get("l")? },
            "PI_B_COEFF" => NamedPoly::PiBCoeff { n: p.get("n")?, k: p.get("k")? },
            "NARB_PAIRED" => NamedPoly::NarBPaired { n: p.get("n")?, k: p.get("k")? },
            "U_NK" => NamedPoly::Unk { n: p.get("n")?, k: p.get("k")? },
            "TRI_EAR" => NamedPoly::TriEar { n: p.get("n")?, k: p.get("k")? },
            "TWIST_CAT" => NamedPoly::TwistCat { n: p.get("n")? },
            "AB_CANDIDATE_SN" => NamedPoly::AbCandidateSn { n: p.get("n")?, k: p.get("k")? },
            "MARKED_NCM" => NamedPoly::MarkedNcm { n: p.get("n")?, k: p.get("k")?, r: p.get("r")? },
            "SCHUR_INTERP" => NamedPoly::SchurInterp { n: p.get("n")?, k: p.get("k")?, s: p.get("s")? },
            _ => return Err(PolyError::UnknownId(id)),
        })
    }
}

fn q_cat(n: i64) -> IntPoly {
    if n < 0 {
        return IntPoly::zero();
    }
    q_binomial(2 * n, n).div_exact(&q_int(n + 1))
}

fn q_nar(n: i64, k: i64) -> IntPoly {
    if n == 0 {
        return if k == 0 { IntPoly::one() } else { IntPoly::zero() };
    }
    if n < 0 || k < 1 || k > n {
        return IntPoly::zero();
    }
    (q_binomial(n, k) * q_binomial(n, k - 1)).div_exact(&q_int(n)).shift((k * (k - 1)) as usize)
}

fn q_narb(n: i64, k: i64) -> IntPoly {
    if k < 0 || k > n {
        return IntPoly::zero();
    }
    q_binomial(n, k).pow(2).shift((k * k) as usize)
}

fn q_ncc(n: i64, e: i64, l: i64) -> IntPoly {
    if n < 0 || e < 0 || l < 0 {
        return IntPoly::zero();
    }
    let shift = e * (e + 1) + (n + 1) * l;
    (q_binomial(n, 2 * e) * q_cat(e) * q_binomial(n - 2 * e, l)).shift(shift as usize)
}

/// Three-term form of the cyclic-descent polynomial, valid for `n, k >= 2`.
pub fn g_cdes_three_term(n: i64, k: i64) -> IntPoly {
    assert!(n >= 2 && k >= 2);
    q_nar(n, k) - q_nar(n - 1, k).shift((k - 1) as usize) + q_nar(n - 1, k - 1).shift((k - 2) as usize)
}

/// The bivariate type B block polynomial as a list indexed by the power of `t`.
pub fn pi_b(n: i64) -> Vec<IntPoly> {
    assert!(n >= 1);
    let mut out = vec![IntPoly::zero(); (2 * n + 2) as usize];
    for j in 0..=n {
        let base = q_binomial(n, j).shift((j * j) as usize);
        out[(2 * j) as usize] += (&base * q_binomial(n - 1, j - 1)).shift((n - j) as usize);
        out[(2 * j + 1) as usize] += &base * q_binomial(n - 1, j);
    }
    while out.last().is_some_and(IntPoly::is_zero) {
        out.pop();
    }
    out
}

fn domain(id: &'static str, ok: bool, reason: &str) -> Result<(), PolyError> {
    if ok {
        Ok(())
    } else {
        Err(PolyError::OutOfDomain { id, reason: reason.to_string() })
    }
}

/// Build a named polynomial.
pub fn named_polynomial(id: &NamedPoly) -> Result<IntPoly, PolyError> {
    let name = id.id();
    Ok(match *id {
        NamedPoly::Cat { n } => {
            domain(name, n >= 0, "need n >= 0")?;
            q_cat(n)
        }
        NamedPoly::Nar { n, k } => {
            domain(name, n >= 0, "need n >= 0")?;
            q_nar(n, k)
        }
        NamedPoly::CatB { n } => {
            domain(name, n >= 0, "need n >= 0")?;
            q_binomial(2 * n, n)
        }
        NamedPoly::NarB { n, k } | NamedPoly::NarBPaired { n, k } => {
            domain(name, n >= 0, "need n >= 0")?;
            q_narb(n, k)
        }
        NamedPoly::Xns { n, s } => {
            domain(name, n >= 0 && 0 <= s && s <= n, "need 0 <= s <= n")?;
            q_binomial(2 * n, n) - q_binomial(2 * n, n - s - 1)
        }
        NamedPoly::Yns { n, s } => {
            domain(name, n >= 0 && 0 <= s && s <= n, "need 0 <= s <= n")?;
            q_binomial(2 * n, n) - q_binomial(2 * n, n - s - 1).shift((s + 1) as usize)
        }
        NamedPoly::GCdes { n, k } => {
            domain(name, n >= 0 && k >= 0, "need n, k >= 0")?;
            if n <= 1 || k <= 1 {
                if (n, k) == (0, 0) || (n, k) == (1, 1) {
                    IntPoly::one()
                } else {
                    IntPoly::zero()
                }
            } else {
                let num = (IntPoly::one() + IntPoly::q_pow(n as usize))
                    * q_binomial(n + 1, k)
                    * q_binomial(n - 2, k - 2);
                num.div_exact(&q_int(n + 1)).shift((k * (k - 2)) as usize)
            }
        }
        NamedPoly::Qbw { n, k } => {
            domain(name, n >= 0 && k >= 0, "need n, k >= 0")?;
            if n == 0 {
                if k == 0 {
                    IntPoly::one()
                } else {
                    IntPoly::zero()
                }
            } else if k < 1 || k > n {
                IntPoly::zero()
            } else {
                ((IntPoly::one() + IntPoly::q_pow(n as usize)) * q_binomial(n, k) * q_binomial(n - 1, k - 1))
                    .shift((k * (k - 1)) as usize)
            }
        }
        NamedPoly::Qncc { n, e, l } => {
            domain(name, n >= 0 && e >= 0 && l >= 0, "need n, e, l >= 0")?;
            q_ncc(n, e, l)
        }
        NamedPoly::Qnccb { n, e, l } => {
            domain(name, n >= 0 && e >= 0 && l >= 0, "need n, e, l >= 0")?;
            let shift = e * e + n * l;
            (q_int(e + 1) * q_binomial(n, 2 * e) * q_cat(e) * q_binomial(n - 2 * e, l)).shift(shift as usize)
        }
        NamedPoly::PiBCoeff { n, k } => {
            domain(name, n >= 1 && k >= 0, "need n >= 1, k >= 0")?;
            pi_b(n).get(k as usize).cloned().unwrap_or_default()
        }
        NamedPoly::Unk { n, k } => {
            domain(name, n >= 0 && k >= 0, "need n, k >= 0")?;
            (0..=k).map(|e| (IntPoly::one() + q_int(e)) * q_ncc(n, e, k - e)).sum()
        }
        NamedPoly::TriEar { n, k } => {
            domain(name, n >= 4 && 2 <= k && 2 * k <= n, "need n >= 4 and 2 <= k <= n/2")?;
            let tail: IntPoly =
                (0..=n - 2 * k).map(|j| q_binomial(n - 2 * k, j).shift((j * (n - 2)) as usize)).sum();
            let num = q_int(n) * q_binomial(n - 4, 2 * k - 4) * q_cat(k - 2) * tail;
            num.div_exact(&q_int(k)).shift((k * (k - 2)) as usize)
        }
        NamedPoly::TwistCat { n } => {
            domain(name, n >= 0, "need n >= 0")?;
            q_binomial(2 * n, n) - q_binomial(2 * n, n - 2).shift(2)
        }
        NamedPoly::AbCandidateSn { n, k } => {
            domain(name, n >= 1, "need n >= 1")?;
            if k < 1 {
                IntPoly::zero()
            } else {
                (q_binomial(n - 1, k - 1) * q_binomial(n + 1, k)).shift((k * (k - 1)) as usize)
            }
        }
        NamedPoly::MarkedNcm { n, k, r } => {
            domain(name, n >= 0 && k >= 0 && r >= 0, "need n, k, r >= 0")?;
            q_nar(n, k + 1) * q_binomial(n + 1, r)
        }
        NamedPoly::SchurInterp { n, k, s } => {
            domain(name, n >= 0 && 0 <= s && s <= k, "need 0 <= s <= k")?;
            let a = q_binomial(n, k).pow(2);
            let b = (q_binomial(n, k - s - 1) * q_binomial(n, k + s + 1)).shift(((s + 1) * (s + 1)) as usize);
            (a - b).shift((k * (k + 1)) as usize)
        }
    })
}

/// `[t^k]` sum helper for integer sequences indexed by a statistic.
pub fn to_u64(v: &BigInt) -> Option<u64> {
    v.to_u64()
}
