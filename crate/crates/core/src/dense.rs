//! Fixed-width fast paths for Laurent multiplication and exact division.
//! Monomials are Kronecker-packed into one integer. Small boxes use dense
//! arrays; larger ones use sparse packed terms (hash accumulation for
//! products, heap-driven division).
//!
//! Every routine returns `None` when coefficients do not fit, the packed
//! array would be too large, or the fast path cannot certify its answer; the
//! caller then falls back to the sparse `BigInt` algorithms.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use ethnum::I256;
use rustc_hash::FxHashMap;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Largest packed array the fast paths will allocate.
const MAX_LEN: usize = 1 << 20;

pub(crate) type Terms<'a> = Vec<(&'a [i32], &'a BigInt)>;

/// A pair of fixed-width types: operands and a wider accumulator that
/// holds any single operand product without overflow.
pub(crate) trait Tier {
    type Op: Copy + PartialEq;
    type Acc: Copy + PartialEq;
    const ZERO: Self::Acc;
    fn op(c: &BigInt) -> Option<Self::Op>;
    fn acc(c: &BigInt) -> Option<Self::Acc>;
    fn to_big(c: Self::Acc) -> BigInt;
    fn widen(c: Self::Op) -> Self::Acc;
    fn mul(a: Self::Op, b: Self::Op) -> Self::Acc;
    fn add(a: Self::Acc, b: Self::Acc) -> Option<Self::Acc>;
    fn sub(a: Self::Acc, b: Self::Acc) -> Option<Self::Acc>;
    /// `a / b` if exact and representable as an operand.
    fn div_exact(a: Self::Acc, b: Self::Op) -> Option<Self::Op>;
}

struct Narrow;

impl Tier for Narrow {
    type Op = i64;
    type Acc = i128;
    const ZERO: i128 = 0;
    fn op(c: &BigInt) -> Option<i64> {
        c.to_i64()
    }
    fn acc(c: &BigInt) -> Option<i128> {
        c.to_i128()
    }
    fn to_big(c: i128) -> BigInt {
        BigInt::from(c)
    }
    fn widen(c: i64) -> i128 {
        i128::from(c)
    }
    fn mul(a: i64, b: i64) -> i128 {
        i128::from(a) * i128::from(b)
    }
    fn add(a: i128, b: i128) -> Option<i128> {
        a.checked_add(b)
    }
    fn sub(a: i128, b: i128) -> Option<i128> {
        a.checked_sub(b)
    }
    fn div_exact(a: i128, b: i64) -> Option<i64> {
        let b = i128::from(b);
        if a % b != 0 {
            return None;
        }
        i64::try_from(a / b).ok()
    }
}

struct Wide;

impl Tier for Wide {
    type Op = i128;
    type Acc = I256;
    const ZERO: I256 = I256::ZERO;
    fn op(c: &BigInt) -> Option<i128> {
        c.to_i128()
    }
    fn acc(c: &BigInt) -> Option<I256> {
        let bytes = c.to_signed_bytes_le();
        if bytes.len() > 32 {
            return None;
        }
        let fill = if c.sign() == num_bigint::Sign::Minus { 0xff } else { 0 };
        let mut buf = [fill; 32];
        buf[..bytes.len()].copy_from_slice(&bytes);
        Some(I256::from_le_bytes(buf))
    }
    fn to_big(c: I256) -> BigInt {
        BigInt::from_signed_bytes_le(&c.to_le_bytes())
    }
    fn widen(c: i128) -> I256 {
        I256::from(c)
    }
    fn mul(a: i128, b: i128) -> I256 {
        // |a b| < 2^254, so the wrapping product is exact.
        I256::from(a).wrapping_mul(I256::from(b))
    }
    fn add(a: I256, b: I256) -> Option<I256> {
        a.checked_add(b)
    }
    fn sub(a: I256, b: I256) -> Option<I256> {
        a.checked_sub(b)
    }
    fn div_exact(a: I256, b: i128) -> Option<i128> {
        let b = I256::from(b);
        if a % b != I256::ZERO {
            return None;
        }
        i128::try_from(a / b).ok()
    }
}

fn min_max(terms: &Terms<'_>, nvars: usize) -> (Vec<i32>, Vec<i32>) {
    let mut lo = vec![i32::MAX; nvars];
    let mut hi = vec![i32::MIN; nvars];
    for (m, _) in terms {
        for i in 0..nvars {
            lo[i] = lo[i].min(m[i]);
            hi[i] = hi[i].max(m[i]);
        }
    }
    (lo, hi)
}

/// Mixed-radix strides with the first variable most significant, so packed
/// order agrees with lexicographic order on exponent vectors.
fn strides(ranges: &[usize]) -> Option<(Vec<usize>, usize)> {
    let mut s = vec![0; ranges.len()];
    let mut len: usize = 1;
    for i in (0..ranges.len()).rev() {
        s[i] = len;
        len = len.checked_mul(ranges[i] + 1)?;
        if len > MAX_LEN {
            return None;
        }
    }
    Some((s, len))
}

/// Strides for sparse packing; only the packed key has to fit in a `u64`.
fn sparse_strides(ranges: &[usize]) -> Option<Vec<u64>> {
    let mut s = vec![0; ranges.len()];
    let mut len: u64 = 1;
    for i in (0..ranges.len()).rev() {
        s[i] = len;
        len = len.checked_mul(ranges[i] as u64 + 1)?;
    }
    (len < 1 << 62).then_some(s)
}

fn pack64(m: &[i32], lo: &[i32], strides: &[u64]) -> u64 {
    m.iter()
        .zip(lo)
        .zip(strides)
        .map(|((&e, &l), &s)| (e - l) as u64 * s)
        .sum()
}

fn unpack64(mut idx: u64, strides: &[u64]) -> Vec<usize> {
    strides
        .iter()
        .map(|&s| {
            let d = idx / s;
            idx %= s;
            d as usize
        })
        .collect()
}

fn pack(m: &[i32], lo: &[i32], strides: &[usize]) -> usize {
    m.iter()
        .zip(lo)
        .zip(strides)
        .map(|((&e, &l), &s)| (e - l) as usize * s)
        .sum()
}

fn unpack(mut idx: usize, strides: &[usize]) -> Vec<usize> {
    strides
        .iter()
        .map(|&s| {
            let d = idx / s;
            idx %= s;
            d
        })
        .collect()
}

/// Product of two nonzero polynomials, as `(exponents, coefficient)` pairs.
pub(crate) fn mul(a: &Terms<'_>, b: &Terms<'_>, nvars: usize) -> Option<Vec<(Vec<i32>, BigInt)>> {
    mul_with::<Narrow>(a, b, nvars, false)
        .or_else(|| mul_with::<Wide>(a, b, nvars, false))
        .or_else(|| sparse_mul_with::<Narrow>(a, b, nvars))
        .or_else(|| sparse_mul_with::<Wide>(a, b, nvars))
}

pub(crate) fn square(a: &Terms<'_>, nvars: usize) -> Option<Vec<(Vec<i32>, BigInt)>> {
    mul_with::<Narrow>(a, a, nvars, true)
        .or_else(|| mul_with::<Wide>(a, a, nvars, true))
        .or_else(|| sparse_mul_with::<Narrow>(a, a, nvars))
        .or_else(|| sparse_mul_with::<Wide>(a, a, nvars))
}

fn sparse_mul_with<T: Tier>(a: &Terms<'_>, b: &Terms<'_>, nvars: usize) -> Option<Vec<(Vec<i32>, BigInt)>> {
    let (alo, ahi) = min_max(a, nvars);
    let (blo, bhi) = min_max(b, nvars);
    let ranges: Vec<usize> = (0..nvars)
        .map(|i| (ahi[i] - alo[i] + bhi[i] - blo[i]) as usize)
        .collect();
    let st = sparse_strides(&ranges)?;
    let pa: Vec<(u64, T::Op)> = a
        .iter()
        .map(|(m, c)| Some((pack64(m, &alo, &st), T::op(c)?)))
        .collect::<Option<_>>()?;
    let pb: Vec<(u64, T::Op)> = b
        .iter()
        .map(|(m, c)| Some((pack64(m, &blo, &st), T::op(c)?)))
        .collect::<Option<_>>()?;
    let mut acc: FxHashMap<u64, T::Acc> = FxHashMap::default();
    acc.reserve(pa.len().max(pb.len()) * 4);
    for &(ia, ca) in &pa {
        for &(ib, cb) in &pb {
            let slot = acc.entry(ia + ib).or_insert(T::ZERO);
            *slot = T::add(*slot, T::mul(ca, cb))?;
        }
    }
    let lo: Vec<i32> = alo.iter().zip(&blo).map(|(x, y)| x + y).collect();
    Some(collect_sparse::<T>(acc.into_iter().collect(), &st, &lo))
}

fn collect_sparse<T: Tier>(mut terms: Vec<(u64, T::Acc)>, st: &[u64], lo: &[i32]) -> Vec<(Vec<i32>, BigInt)> {
    terms.retain(|(_, c)| *c != T::ZERO);
    terms.sort_unstable_by_key(|(k, _)| *k);
    terms
        .into_iter()
        .map(|(idx, c)| {
            let e = unpack64(idx, st)
                .iter()
                .zip(lo)
                .map(|(&d, &l)| d as i32 + l)
                .collect();
            (e, T::to_big(c))
        })
        .collect()
}

fn mul_with<T: Tier>(
    a: &Terms<'_>,
    b: &Terms<'_>,
    nvars: usize,
    square: bool,
) -> Option<Vec<(Vec<i32>, BigInt)>> {
    let (alo, ahi) = min_max(a, nvars);
    let (blo, bhi) = min_max(b, nvars);
    let ranges: Vec<usize> = (0..nvars)
        .map(|i| (ahi[i] - alo[i] + bhi[i] - blo[i]) as usize)
        .collect();
    let (st, len) = strides(&ranges)?;
    let pa: Vec<(usize, T::Op)> = a
        .iter()
        .map(|(m, c)| Some((pack(m, &alo, &st), T::op(c)?)))
        .collect::<Option<_>>()?;
    let pb: Vec<(usize, T::Op)> = b
        .iter()
        .map(|(m, c)| Some((pack(m, &blo, &st), T::op(c)?)))
        .collect::<Option<_>>()?;
    let mut acc = vec![T::ZERO; len];
    if square {
        // Off-diagonal products are counted once here and doubled below.
        for (x, &(ia, ca)) in pa.iter().enumerate() {
            for &(ib, cb) in &pa[x + 1..] {
                let slot = &mut acc[ia + ib];
                *slot = T::add(*slot, T::mul(ca, cb))?;
            }
        }
        for c in &mut acc {
            *c = T::add(*c, *c)?;
        }
        for &(ia, ca) in &pa {
            let slot = &mut acc[2 * ia];
            *slot = T::add(*slot, T::mul(ca, ca))?;
        }
    } else {
        for &(ia, ca) in &pa {
            for &(ib, cb) in &pb {
                let slot = &mut acc[ia + ib];
                *slot = T::add(*slot, T::mul(ca, cb))?;
            }
        }
    }
    let lo: Vec<i32> = alo.iter().zip(&blo).map(|(x, y)| x + y).collect();
    Some(collect::<T>(acc, &st, &lo))
}

fn collect<T: Tier>(acc: Vec<T::Acc>, st: &[usize], lo: &[i32]) -> Vec<(Vec<i32>, BigInt)> {
    acc.into_iter()
        .enumerate()
        .filter(|(_, c)| *c != T::ZERO)
        .map(|(idx, c)| {
            let e = unpack(idx, st)
                .iter()
                .zip(lo)
                .map(|(&d, &l)| d as i32 + l)
                .collect();
            (e, T::to_big(c))
        })
        .collect()
}

/// Exact quotient `p / d` for nonzero `p`, `d`. `None` means "not decided
/// here", not "not divisible".
pub(crate) fn exact_div(p: &Terms<'_>, d: &Terms<'_>, nvars: usize) -> Option<Vec<(Vec<i32>, BigInt)>> {
    exact_div_with::<Narrow>(p, d, nvars)
        .or_else(|| exact_div_with::<Wide>(p, d, nvars))
        .or_else(|| sparse_div_with::<Narrow>(p, d, nvars))
        .or_else(|| sparse_div_with::<Wide>(p, d, nvars))
}

/// Heap division: quotient terms come out in decreasing order, and the
/// heap merges the pending products `q_j * d_i` with the dividend.
fn sparse_div_with<T: Tier>(p: &Terms<'_>, d: &Terms<'_>, nvars: usize) -> Option<Vec<(Vec<i32>, BigInt)>> {
    let (plo, phi) = min_max(p, nvars);
    let (dlo, dhi) = min_max(d, nvars);
    let prange: Vec<usize> = (0..nvars).map(|i| (phi[i] - plo[i]) as usize).collect();
    let drange: Vec<usize> = (0..nvars).map(|i| (dhi[i] - dlo[i]) as usize).collect();
    if drange.iter().zip(&prange).any(|(a, b)| a > b) {
        return None;
    }
    let st = sparse_strides(&prange)?;
    let mut pp: Vec<(u64, T::Acc)> = p
        .iter()
        .map(|(m, c)| Some((pack64(m, &plo, &st), T::acc(c)?)))
        .collect::<Option<_>>()?;
    pp.sort_unstable_by_key(|(k, _)| Reverse(*k));
    let mut pd: Vec<(u64, T::Op)> = d
        .iter()
        .map(|(m, c)| Some((pack64(m, &dlo, &st), T::op(c)?)))
        .collect::<Option<_>>()?;
    pd.sort_unstable_by_key(|(k, _)| Reverse(*k));
    let (top, lead) = pd[0];
    let mut quot: Vec<(u64, T::Op)> = Vec::new();
    // (key, quotient index, divisor index)
    let mut heap: BinaryHeap<(u64, usize, usize)> = BinaryHeap::new();
    let mut next = 0;
    loop {
        let from_p = pp.get(next).map(|t| t.0);
        let from_h = heap.peek().map(|t| t.0);
        let key = match (from_p, from_h) {
            (None, None) => break,
            (a, b) => a.max(b).expect("one side is present"),
        };
        let mut c = T::ZERO;
        if from_p == Some(key) {
            c = pp[next].1;
            next += 1;
        }
        while heap.peek().is_some_and(|t| t.0 == key) {
            let (_, j, i) = heap.pop().expect("peeked");
            c = T::sub(c, T::mul(quot[j].1, pd[i].1))?;
            if i + 1 < pd.len() {
                heap.push((quot[j].0 + pd[i + 1].0, j, i + 1));
            }
        }
        if c == T::ZERO {
            continue;
        }
        if key < top {
            return None;
        }
        let qkey = key - top;
        let digits = unpack64(qkey, &st);
        if digits.iter().zip(&drange).zip(&prange).any(|((&q, &r), &b)| q + r > b) {
            return None;
        }
        let q = T::div_exact(c, lead)?;
        quot.push((qkey, q));
        if pd.len() > 1 {
            heap.push((qkey + pd[1].0, quot.len() - 1, 1));
        }
    }
    let lo: Vec<i32> = plo.iter().zip(&dlo).map(|(x, y)| x - y).collect();
    let terms = quot.into_iter().map(|(k, q)| (k, T::widen(q))).collect();
    Some(collect_sparse::<T>(terms, &st, &lo))
}

fn exact_div_with<T: Tier>(p: &Terms<'_>, d: &Terms<'_>, nvars: usize) -> Option<Vec<(Vec<i32>, BigInt)>> {
    let (plo, phi) = min_max(p, nvars);
    let (dlo, dhi) = min_max(d, nvars);
    let prange: Vec<usize> = (0..nvars).map(|i| (phi[i] - plo[i]) as usize).collect();
    let drange: Vec<usize> = (0..nvars).map(|i| (dhi[i] - dlo[i]) as usize).collect();
    if drange.iter().zip(&prange).any(|(a, b)| a > b) {
        return None;
    }
    let (st, len) = strides(&prange)?;
    let mut rem = vec![T::ZERO; len];
    for (m, c) in p {
        rem[pack(m, &plo, &st)] = T::acc(c)?;
    }
    let pd: Vec<(usize, T::Op)> = d
        .iter()
        .map(|(m, c)| Some((pack(m, &dlo, &st), T::op(c)?)))
        .collect::<Option<_>>()?;
    let &(top, lead) = pd.iter().max_by_key(|(i, _)| *i)?;
    let mut quot = vec![T::ZERO; len];
    for pos in (top..len).rev() {
        let c = rem[pos];
        if c == T::ZERO {
            continue;
        }
        let q = T::div_exact(c, lead)?;
        let qpos = pos - top;
        // The quotient's monomial times every monomial of `d` must stay in
        // the box, otherwise packing would carry between variables.
        let digits = unpack(qpos, &st);
        if digits.iter().zip(&drange).zip(&prange).any(|((&q, &r), &b)| q + r > b) {
            return None;
        }
        for &(i, dc) in &pd {
            let slot = &mut rem[qpos + i];
            *slot = T::sub(*slot, T::mul(q, dc))?;
        }
        quot[qpos] = T::widen(q);
    }
    if rem[..top].iter().any(|c| *c != T::ZERO) {
        return None;
    }
    let lo: Vec<i32> = plo.iter().zip(&dlo).map(|(x, y)| x - y).collect();
    Some(collect::<T>(quot, &st, &lo))
}
