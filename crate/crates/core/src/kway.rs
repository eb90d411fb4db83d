//! k-way perfect shuffle: `k` equal parts interleaved, last part first.
//!
//! The element at 1-based `i` of an array of `kn` elements moves to
//! `k * i mod (kn + 1)`. If `k` is a primitive root of `p^2` for an odd
//! prime `p`, it is a primitive root of every `p^j`, so a block of
//! `p^j - 1` elements splits into one cycle per leader `p^0 .. p^(j-1)`.
//! Blocks additionally need `k | p^j - 1`. Elements left over once no
//! admissible block fits (always fewer than the smallest admissible block)
//! are permuted by a constant-space cycle walk.
//!
//! A perfect square is never a primitive root of an odd prime power, so
//! `k = 4` and `k = 9` have no base. They are applied as two 2-way or two
//! 3-way shuffles of the same array, since `(b * i) * b = b^2 * i`.

use crate::buffer::SwapBuffer;
use crate::error::{Error, Result};
use crate::meter::Meter;
use crate::numtheory::{gcd, inverse_mod, is_prime, is_primitive_root};
use crate::permcore::ShuffleKind;
use crate::rotate::rotate_right_unchecked;
use crate::shuffle::{leader_passes, push_cycle};

pub const MAX_K: usize = 9;
const MAX_BASE_PRIME: u64 = 100;

/// A prime `p` for which `k` is a primitive root of every power `p^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KwayBase {
    pub k: usize,
    pub p: usize,
}

fn check_k(k: usize) -> Result<()> {
    if (2..=MAX_K).contains(&k) {
        Ok(())
    } else {
        Err(Error::UnsupportedK(k))
    }
}

/// Smallest odd prime `p <= 100`, coprime to `k`, with `k` a primitive root
/// of `p^2`.
pub fn find_base(k: usize) -> Result<KwayBase> {
    check_k(k)?;
    let kk = k as u64;
    let p = (3..=MAX_BASE_PRIME)
        .step_by(2)
        .filter(|&p| is_prime(p) && gcd(kk, p) == 1)
        .find(|&p| is_primitive_root(kk, p * p).unwrap_or(false))
        .ok_or(Error::NoBaseFound(k))?;
    debug_assert!((1..=4).all(|j| is_primitive_root(kk, p.pow(j)).unwrap_or(false)));
    Ok(KwayBase { k, p: p as usize })
}

/// How a supported `k` is realized: `passes` applications of a `base.k`-way
/// shuffle, where `base.k^passes = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KwayStrategy {
    pub base: KwayBase,
    pub passes: u32,
}

pub fn strategy(k: usize) -> Result<KwayStrategy> {
    check_k(k)?;
    match find_base(k) {
        Ok(base) => Ok(KwayStrategy { base, passes: 1 }),
        Err(Error::NoBaseFound(_)) => {
            for root in 2..k {
                let mut power = root;
                let mut passes = 1;
                while power < k {
                    power *= root;
                    passes += 1;
                }
                if power == k {
                    if let Ok(base) = find_base(root) {
                        return Ok(KwayStrategy { base, passes });
                    }
                }
            }
            Err(Error::NoBaseFound(k))
        }
        Err(e) => Err(e),
    }
}

/// Largest admissible block `(p^j - 1, j)` with `k | p^j - 1` and
/// `p^j - 1 <= remaining`.
fn largest_block(base: KwayBase, remaining: usize) -> Option<(usize, u32)> {
    let mut best = None;
    let (mut pow, mut j) = (base.p, 1u32);
    while pow - 1 <= remaining {
        if (pow - 1) % base.k == 0 {
            best = Some((pow - 1, j));
        }
        match pow.checked_mul(base.p) {
            Some(next) => pow = next,
            None => break,
        }
        j += 1;
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    /// `size = p^j - 1` elements at `offset`.
    Block { offset: usize, size: usize, j: u32 },
    /// Everything from `offset` to the end, too short for any block.
    Tail { offset: usize },
}

impl Step {
    fn offset(self) -> usize {
        match self {
            Step::Block { offset, .. } | Step::Tail { offset } => offset,
        }
    }

    fn end(self, total: usize) -> usize {
        match self {
            Step::Block { offset, size, .. } => offset + size,
            Step::Tail { .. } => total,
        }
    }
}

struct Steps {
    base: KwayBase,
    offset: usize,
    total: usize,
}

impl Iterator for Steps {
    type Item = Step;

    fn next(&mut self) -> Option<Step> {
        let offset = self.offset;
        let remaining = self.total - offset;
        if remaining == 0 {
            return None;
        }
        Some(match largest_block(self.base, remaining) {
            Some((size, j)) => {
                self.offset += size;
                Step::Block { offset, size, j }
            }
            None => {
                self.offset = self.total;
                Step::Tail { offset }
            }
        })
    }
}

fn steps(base: KwayBase, total: usize) -> Steps {
    Steps {
        base,
        offset: 0,
        total,
    }
}

/// Moves the first `m` elements of each of the `k` parts of
/// `[offset, offset + k * n)` to the front, in part order.
///
/// Part `q`'s head is pulled forward by one right rotation over the
/// already-displaced tails of parts `0..q`.
fn gather<B, M>(buf: &mut B, offset: usize, k: usize, n: usize, m: usize, meter: &mut M)
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    if m == n {
        return;
    }
    for q in 1..k {
        rotate_right_unchecked(buf, offset + q * m, offset + q * n + m, m, meter);
    }
}

fn ungather<B, M>(buf: &mut B, offset: usize, k: usize, n: usize, m: usize, meter: &mut M)
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    if m == n {
        return;
    }
    for q in (1..k).rev() {
        let (lo, hi) = (offset + q * m, offset + q * n + m);
        rotate_right_unchecked(buf, lo, hi, hi - lo - m, meter);
    }
}

#[inline]
fn mul_map(multiplier: usize, modulus: usize) -> impl Fn(usize) -> usize + Copy {
    move |j| multiplier * j % modulus
}

#[inline]
fn wide_mul_map(multiplier: usize, modulus: usize) -> impl Fn(usize) -> usize + Copy {
    move |j| (multiplier as u128 * j as u128 % modulus as u128) as usize
}

// leader candidate, cursor, modulus, element temporary
const TAIL_WORDS: u64 = 4;

/// Applies `map` on local positions `1..=len` by visiting each cycle from
/// its smallest member. Quadratic time, so only used on short tails.
fn walk_cycles<B, M, F>(buf: &mut B, offset: usize, len: usize, map: F, meter: &mut M)
where
    B: SwapBuffer + ?Sized,
    M: Meter,
    F: Fn(usize) -> usize + Copy,
{
    meter.acquire(TAIL_WORDS);
    for leader in 1..=len {
        let mut j = map(leader);
        while j > leader {
            j = map(j);
        }
        if j == leader && map(leader) != leader {
            let placed = push_cycle(buf, offset, leader, map);
            meter.moves(placed as u64 + 1);
        }
    }
    meter.release(TAIL_WORDS);
}

// offset, remaining, block size, exponent
const LOOP_WORDS: u64 = 4;

fn check_len(len: usize, k: usize) -> Result<()> {
    // keeps k * j below usize::MAX for every local position j
    if len % k != 0 || len > usize::MAX / 16 {
        return Err(Error::InvalidLength {
            len,
            kind: ShuffleKind::KWay(k).to_string(),
        });
    }
    Ok(())
}

fn single_pass<B, M>(buf: &mut B, base: KwayBase, meter: &mut M)
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let (k, total) = (base.k, buf.len());
    meter.acquire(LOOP_WORDS);
    for step in steps(base, total) {
        match step {
            Step::Block { offset, size, j } => {
                gather(buf, offset, k, (total - offset) / k, size / k, meter);
                leader_passes(buf, offset, base.p, j, mul_map(k, size + 1), meter);
            }
            Step::Tail { offset } => {
                let len = total - offset;
                walk_cycles(buf, offset, len, mul_map(k, len + 1), meter);
            }
        }
    }
    meter.release(LOOP_WORDS);
}

fn single_unpass<B, M>(buf: &mut B, base: KwayBase, meter: &mut M)
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let (k, total) = (base.k, buf.len());
    meter.acquire(LOOP_WORDS + 1);
    let mut end = total;
    while end > 0 {
        let step = steps(base, total)
            .find(|s| s.end(total) == end)
            .expect("step boundaries are deterministic");
        match step {
            Step::Block { offset, size, j } => {
                let inv = inverse_mod(k as u64, size as u64 + 1).expect("k is a unit") as usize;
                leader_passes(buf, offset, base.p, j, wide_mul_map(inv, size + 1), meter);
                ungather(buf, offset, k, (total - offset) / k, size / k, meter);
            }
            Step::Tail { offset } => {
                let len = total - offset;
                let inv = inverse_mod(k as u64, len as u64 + 1).expect("k is a unit") as usize;
                walk_cycles(buf, offset, len, wide_mul_map(inv, len + 1), meter);
            }
        }
        end = step.offset();
    }
    meter.release(LOOP_WORDS + 1);
}

/// In-place k-way shuffle: the element at 1-based `i` moves to
/// `k * i mod (len + 1)`.
pub fn k_shuffle<B, M>(buf: &mut B, k: usize, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let plan = strategy(k)?;
    check_len(buf.len(), k)?;
    for _ in 0..plan.passes {
        single_pass(buf, plan.base, meter);
    }
    Ok(())
}

/// Inverse of [`k_shuffle`].
pub fn k_unshuffle<B, M>(buf: &mut B, k: usize, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let plan = strategy(k)?;
    check_len(buf.len(), k)?;
    for _ in 0..plan.passes {
        single_unpass(buf, plan.base, meter);
    }
    Ok(())
}
