//! Group identifiers, half-integer weight vectors, rho vectors, the parity
//! decomposition of `lambda + rho`, and the order-2 torus elements.
//!
//! Half-integers are stored as doubled arbitrary-precision integers, so a
//! value `v` is held as `2v`. All weights, rho shifts and eta sets live in
//! this representation; nothing in the crate touches floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// The supported group families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Gl,
    Sp,
    SoEven,
    SoOdd,
    G2,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sp => "sp",
            Family::SoEven => "so_even",
            Family::SoOdd => "so_odd",
            Family::G2 => "g2",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "gl" => Some(Family::Gl),
            "sp" => Some(Family::Sp),
            "so_even" => Some(Family::SoEven),
            "so_odd" => Some(Family::SoOdd),
            "g2" => Some(Family::G2),
            _ => None,
        }
    }
}

/// A group: family plus rank. Rank `n` means GL(n), Sp(2n), SO(2n) or
/// SO(2n+1); G2 has rank fixed at 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupId {
    pub family: Family,
    pub rank: usize,
}

impl GroupId {
    pub fn new(family: Family, rank: usize) -> GroupId {
        assert!(rank >= 1, "rank must be positive");
        if family == Family::G2 {
            assert!(rank == 2, "G2 has rank 2");
        }
        GroupId { family, rank }
    }

    pub fn gl(rank: usize) -> GroupId {
        GroupId::new(Family::Gl, rank)
    }

    pub fn sp(rank: usize) -> GroupId {
        GroupId::new(Family::Sp, rank)
    }

    pub fn so_even(rank: usize) -> GroupId {
        GroupId::new(Family::SoEven, rank)
    }

    pub fn so_odd(rank: usize) -> GroupId {
        GroupId::new(Family::SoOdd, rank)
    }

    pub fn g2() -> GroupId {
        GroupId::new(Family::G2, 2)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::G2 {
            write!(f, "g2")
        } else {
            write!(f, "{}{}", self.family.as_str(), self.rank)
        }
    }
}

/// A half-integer stored as its doubled value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: BigInt,
}

impl HalfInt {
    /// From an ordinary integer.
    pub fn from_int(v: i64) -> HalfInt {
        HalfInt {
            twice: BigInt::from(2 * v),
        }
    }

    pub fn from_bigint(v: BigInt) -> HalfInt {
        HalfInt { twice: v * 2 }
    }

    /// From a doubled value, i.e. `from_doubled(3)` is 3/2.
    pub fn from_doubled(twice: i64) -> HalfInt {
        HalfInt {
            twice: BigInt::from(twice),
        }
    }

    pub fn from_doubled_bigint(twice: BigInt) -> HalfInt {
        HalfInt { twice }
    }

    pub fn zero() -> HalfInt {
        HalfInt {
            twice: BigInt::zero(),
        }
    }

    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    pub fn is_integer(&self) -> bool {
        (&self.twice % 2u8).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.twice.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.twice.is_negative()
    }

    /// The integer value, if integral.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(&self.twice / 2)
        } else {
            None
        }
    }

    /// Parity of an integer value: 0 or 1. `None` for half-integers.
    pub fn parity(&self) -> Option<u8> {
        if !self.is_integer() {
            return None;
        }
        // twice = 2v, so v mod 2 is (twice mod 4) / 2.
        let m = ((&self.twice % 4i32) + 4i32) % 4i32;
        Some(if m.is_zero() { 0 } else { 1 })
    }

    /// Exact halving: value/2, representable whenever value is an integer.
    pub fn half(&self) -> HalfInt {
        assert!(self.is_integer(), "can only halve integer values exactly");
        HalfInt {
            twice: &self.twice / 2,
        }
    }

    pub fn add(&self, other: &HalfInt) -> HalfInt {
        HalfInt {
            twice: &self.twice + &other.twice,
        }
    }

    pub fn sub(&self, other: &HalfInt) -> HalfInt {
        HalfInt {
            twice: &self.twice - &other.twice,
        }
    }

    pub fn neg(&self) -> HalfInt {
        HalfInt {
            twice: -&self.twice,
        }
    }

    pub fn abs(&self) -> HalfInt {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.twice.clone(), BigInt::from(2))
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// An ordered tuple of half-integers; holds highest weights, rho vectors and
/// their sums. Length equals the rank of the group it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfIntVector {
    entries: Vec<HalfInt>,
}

impl HalfIntVector {
    pub fn new(entries: Vec<HalfInt>) -> HalfIntVector {
        HalfIntVector { entries }
    }

    pub fn from_ints(values: &[i64]) -> HalfIntVector {
        HalfIntVector {
            entries: values.iter().map(|&v| HalfInt::from_int(v)).collect(),
        }
    }

    /// From doubled values: `from_doubled(&[3, 1])` is (3/2, 1/2).
    pub fn from_doubled(twice: &[i64]) -> HalfIntVector {
        HalfIntVector {
            entries: twice.iter().map(|&t| HalfInt::from_doubled(t)).collect(),
        }
    }

    pub fn zero(len: usize) -> HalfIntVector {
        HalfIntVector {
            entries: vec![HalfInt::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &HalfInt {
        &self.entries[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HalfInt> {
        self.entries.iter()
    }

    pub fn add(&self, other: &HalfIntVector) -> HalfIntVector {
        assert_eq!(self.len(), other.len());
        HalfIntVector {
            entries: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &HalfIntVector) -> HalfIntVector {
        assert_eq!(self.len(), other.len());
        HalfIntVector {
            entries: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// Add the constant vector (c, c, ..., c).
    pub fn add_constant(&self, c: &HalfInt) -> HalfIntVector {
        HalfIntVector {
            entries: self.iter().map(|e| e.add(c)).collect(),
        }
    }

    pub fn all_integer(&self) -> bool {
        self.iter().all(|e| e.is_integer())
    }

    /// All entries integer, or all entries strictly half-integer.
    pub fn parity_consistent(&self) -> bool {
        self.iter().all(|e| e.is_integer()) || self.iter().all(|e| !e.is_integer())
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] > w[1])
    }

    pub fn last_nonnegative(&self) -> bool {
        self.entries.last().is_none_or(|e| !e.is_negative())
    }

    /// Doubled entries as i64, for the oracle's internal arithmetic.
    /// Weights in this crate are tiny; overflow would mean a misuse far
    /// outside anything the evaluators could handle anyway.
    pub fn to_doubled_i64(&self) -> Vec<i64> {
        self.iter()
            .map(|e| {
                use num_traits::ToPrimitive;
                e.twice()
                    .to_i64()
                    .expect("weight entry exceeds i64 doubled range")
            })
            .collect()
    }
}

impl fmt::Display for HalfIntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The parity split of `lambda + rho`: `eta0` holds the entries that are
/// even, `eta1` the odd ones, both in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaSplit {
    eta0: HalfIntVector,
    eta1: HalfIntVector,
}

impl EtaSplit {
    pub fn eta0(&self) -> &HalfIntVector {
        &self.eta0
    }

    pub fn eta1(&self) -> &HalfIntVector {
        &self.eta1
    }

    pub fn count0(&self) -> usize {
        self.eta0.len()
    }

    pub fn count1(&self) -> usize {
        self.eta1.len()
    }
}

/// A point on the maximal torus: exact nonzero rational coordinates, one per
/// rank. For Sp/SO the reversed-inverse block (and the fixed middle 1 in the
/// odd orthogonal case) is implied by the family and not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPoint {
    coords: Vec<BigRational>,
}

impl TorusPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<TorusPoint> {
        if coords.iter().any(|c| c.is_zero()) {
            return Err(Error::ZeroCoordinate);
        }
        Ok(TorusPoint { coords })
    }

    pub fn identity(rank: usize) -> TorusPoint {
        TorusPoint {
            coords: vec![BigRational::one(); rank],
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Half the sum of the positive roots:
/// `(n-1,...,0)` for GL(n), `(n,...,1)` for Sp(2n), `(n-1,...,0)` for SO(2n),
/// `(n-1/2,...,1/2)` for SO(2n+1), and `(1,1)` for G2 in the
/// fundamental-weight basis.
pub fn rho(group: GroupId) -> HalfIntVector {
    let n = group.rank as i64;
    let twice: Vec<i64> = match group.family {
        Family::Gl | Family::SoEven => (0..n).map(|i| 2 * (n - 1 - i)).collect(),
        Family::Sp => (0..n).map(|i| 2 * (n - i)).collect(),
        Family::SoOdd => (0..n).map(|i| 2 * n - 2 * i - 1).collect(),
        Family::G2 => vec![2, 2],
    };
    HalfIntVector::from_doubled(&twice)
}

/// Is `lambda` a dominant weight for `group`?
///
/// GL: weakly decreasing integers (negative entries allowed). Sp: weakly
/// decreasing nonnegative integers. SO(2n+1): weakly decreasing nonnegative,
/// all-integer or all-half-integer. SO(2n): lambda_1 >= ... >= |lambda_n|,
/// parity-consistent entries; the mirror component (negative last entry) is
/// accepted here since the oracle's weight bookkeeping needs it, but the
/// order-2 closed forms restrict to lambda_n >= 0. G2: a nonnegative integer
/// pair in the fundamental-weight basis.
pub fn is_dominant(group: GroupId, lambda: &HalfIntVector) -> bool {
    if lambda.len() != group.rank {
        return false;
    }
    match group.family {
        Family::Gl => lambda.all_integer() && lambda.is_weakly_decreasing(),
        Family::Sp => {
            lambda.all_integer() && lambda.is_weakly_decreasing() && lambda.last_nonnegative()
        }
        Family::SoOdd => {
            lambda.parity_consistent() && lambda.is_weakly_decreasing() && lambda.last_nonnegative()
        }
        Family::SoEven => {
            if !lambda.parity_consistent() {
                return false;
            }
            let n = lambda.len();
            if n == 1 {
                return true;
            }
            lambda.entries()[..n - 1].windows(2).all(|w| w[0] >= w[1])
                && lambda.get(n - 2) >= &lambda.get(n - 1).abs()
        }
        Family::G2 => lambda.all_integer() && lambda.iter().all(|e| !e.is_negative()),
    }
}

pub(crate) fn require_dominant(group: GroupId, lambda: &HalfIntVector) -> Result<()> {
    if is_dominant(group, lambda) {
        Ok(())
    } else {
        Err(Error::NonDominant {
            group: group.to_string(),
            weight: lambda.to_string(),
        })
    }
}

/// Split the entries of `lambda + rho` by parity mod 2, each side kept in
/// decreasing order. Defined only when `lambda + rho` is all-integer; in
/// particular it is undefined for integer weights of SO(2n+1).
pub fn eta_decompose(group: GroupId, lambda: &HalfIntVector) -> Result<EtaSplit> {
    require_dominant(group, lambda)?;
    let shifted = lambda.add(&rho(group));
    if !shifted.all_integer() {
        return Err(Error::NonIntegerEntries);
    }
    let mut eta0 = Vec::new();
    let mut eta1 = Vec::new();
    // lambda + rho is already decreasing, so filtering preserves the order.
    for e in shifted.iter() {
        match e.parity().expect("integral entry") {
            0 => eta0.push(e.clone()),
            _ => eta1.push(e.clone()),
        }
    }
    Ok(EtaSplit {
        eta0: HalfIntVector::new(eta0),
        eta1: HalfIntVector::new(eta1),
    })
}

/// The order-2 torus element with `n-k` coordinates +1 followed by `k`
/// coordinates -1. Legal ranges: `0 < k <= n/2` for GL/Sp/SO(2n),
/// `0 < k < n` for SO(2n+1).
pub fn order2_element(group: GroupId, k: usize) -> Result<TorusPoint> {
    let n = group.rank;
    let legal = match group.family {
        Family::Gl | Family::Sp | Family::SoEven => k >= 1 && 2 * k <= n,
        Family::SoOdd => k >= 1 && k < n,
        Family::G2 => false,
    };
    if !legal {
        return Err(Error::KOutOfRange {
            group: group.to_string(),
            k: k as i64,
        });
    }
    let mut coords = vec![BigRational::one(); n - k];
    coords.extend(std::iter::repeat_n(-BigRational::one(), k));
    TorusPoint::new(coords)
}

/// `lambda + (m, m, ..., m)`: twisting a GL weight by the m-th power of the
/// determinant character. At `C_{n-k,k}` the character changes by exactly
/// `(-1)^{km}`, so magnitudes are unchanged; every entry of `lambda + rho`
/// flips parity when m is odd, swapping the roles of eta0 and eta1.
pub fn det_twist(lambda: &HalfIntVector, m: i64) -> HalfIntVector {
    lambda.add_constant(&HalfInt::from_int(m))
}
