//! Linear-time, in-place in-shuffle and the shuffles derived from it.
//!
//! The array is processed as a sequence of blocks. At each step the largest
//! `2m = 3^k - 1` that fits the remaining `2n` elements is chosen; a
//! rotation gathers `a_1..a_m` and `a_{n+1}..a_{n+m}` into the front `2m`
//! slots, and because 2 generates the units modulo `3^k`, the in-shuffle of
//! that block has exactly one cycle through each of `1, 3, ..., 3^(k-1)`.
//! Those cycles are applied with the cycle-leader method and the loop moves
//! on to the remaining `2n - 2m` elements.
//!
//! Index conventions: buffers are 0-based, the cycle maps work on 1-based
//! local positions, and local position `j` of a block at `offset` lives at
//! buffer index `offset + j - 1`.

use crate::buffer::{SubBuffer, SwapBuffer};
use crate::error::{Error, Result};
use crate::kway;
use crate::meter::Meter;
use crate::permcore::ShuffleKind;
use crate::rotate::rotate_right_unchecked;

/// One sub-problem: `2m = 3^k - 1` elements starting at `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub offset: usize,
    pub m: usize,
    pub k: u32,
}

impl Block {
    pub fn size(&self) -> usize {
        2 * self.m
    }

    pub fn end(&self) -> usize {
        self.offset + self.size()
    }

    /// `3^k`, the modulus of the block's cycle map.
    pub fn modulus(&self) -> usize {
        self.size() + 1
    }
}

/// The full sequence of blocks for an array of `total` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPlan {
    pub blocks: Vec<Block>,
    pub total: usize,
}

/// Largest `(3^k - 1, k)` not exceeding `remaining`; `remaining >= 2`.
fn largest_block(remaining: usize) -> (usize, u32) {
    let (mut pow, mut k) = (3usize, 1u32);
    while let Some(next) = pow.checked_mul(3) {
        if next - 1 > remaining {
            break;
        }
        pow = next;
        k += 1;
    }
    (pow - 1, k)
}

/// Walks the greedy block sequence without allocating.
#[derive(Debug, Clone)]
pub(crate) struct Blocks {
    offset: usize,
    total: usize,
}

impl Blocks {
    pub(crate) fn new(total: usize) -> Self {
        Blocks { offset: 0, total }
    }

    /// The block that ends exactly at `end`.
    fn ending_at(total: usize, end: usize) -> Block {
        Blocks::new(total)
            .find(|b| b.end() == end)
            .expect("block boundaries are deterministic")
    }
}

impl Iterator for Blocks {
    type Item = Block;

    fn next(&mut self) -> Option<Block> {
        let remaining = self.total - self.offset;
        if remaining == 0 {
            return None;
        }
        let (size, k) = largest_block(remaining);
        let block = Block {
            offset: self.offset,
            m: size / 2,
            k,
        };
        self.offset += size;
        Some(block)
    }
}

fn check_even(len: usize, kind: ShuffleKind) -> Result<()> {
    // keeps 2 * j below usize::MAX for every local position j
    if len % 2 != 0 || len > usize::MAX / 4 {
        return Err(Error::InvalidLength {
            len,
            kind: kind.to_string(),
        });
    }
    Ok(())
}

pub fn plan_blocks(total: usize) -> Result<BlockPlan> {
    check_even(total, ShuffleKind::InShuffle)?;
    Ok(BlockPlan {
        blocks: Blocks::new(total).collect(),
        total,
    })
}

/// Right-rotates `[offset + m, offset + n + m)` by `m`, bringing
/// `a_{n+1}..a_{n+m}` next to `a_1..a_m`.
pub fn gather_rotate<B, M>(
    buf: &mut B,
    offset: usize,
    n: usize,
    m: usize,
    meter: &mut M,
) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    if m == 0
        || m > n
        || offset
            .checked_add(2 * n)
            .map_or(true, |end| end > buf.len())
    {
        return Err(Error::InvalidRange {
            lo: offset + m,
            hi: offset + n + m,
            dist: m,
            len: buf.len(),
        });
    }
    rotate_right_unchecked(buf, offset + m, offset + n + m, m, meter);
    Ok(())
}

// modulus, leader, j and the element temporary
const CYCLE_WORDS: u64 = 4;

/// Applies one permutation cycle by pushing elements forward along `map`.
///
/// Slot `leader` serves as the temporary: it receives each displaced element
/// in turn until the cycle closes. Returns the cycle length.
#[inline]
pub(crate) fn push_cycle<B, F>(buf: &mut B, offset: usize, leader: usize, map: F) -> usize
where
    B: SwapBuffer + ?Sized,
    F: Fn(usize) -> usize,
{
    let home = offset + leader - 1;
    let mut j = map(leader);
    let mut len = 1;
    while j != leader {
        buf.swap(home, offset + j - 1);
        j = map(j);
        len += 1;
    }
    len
}

/// Runs the cycle leader over leaders `base^0 .. base^(count-1)` of a block.
pub(crate) fn leader_passes<B, M, F>(
    buf: &mut B,
    offset: usize,
    base: usize,
    count: u32,
    map: F,
    meter: &mut M,
) where
    B: SwapBuffer + ?Sized,
    M: Meter,
    F: Fn(usize) -> usize + Copy,
{
    meter.acquire(CYCLE_WORDS);
    let mut leader = 1usize;
    for _ in 0..count {
        let placed = push_cycle(buf, offset, leader, map);
        // one temporary load, then every member of the cycle placed once
        meter.moves(placed as u64 + 1);
        leader *= base;
    }
    meter.release(CYCLE_WORDS);
}

#[inline]
fn double_mod(modulus: usize) -> impl Fn(usize) -> usize + Copy {
    move |j| {
        let d = 2 * j;
        if d >= modulus {
            d - modulus
        } else {
            d
        }
    }
}

/// Multiplication by `(modulus + 1) / 2`, the inverse of 2 for odd moduli.
#[inline]
fn halve_mod(modulus: usize) -> impl Fn(usize) -> usize + Copy {
    move |j| {
        if j % 2 == 0 {
            j / 2
        } else {
            j / 2 + modulus / 2 + 1
        }
    }
}

/// In-shuffles the `3^k - 1` elements starting at `offset`.
pub fn cycle_leader_pass<B, M>(buf: &mut B, offset: usize, k: u32, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let size = check_block(buf.len(), offset, k)?;
    leader_passes(buf, offset, 3, k, double_mod(size + 1), meter);
    Ok(())
}

/// Inverse of [`cycle_leader_pass`].
pub fn inverse_cycle_leader_pass<B, M>(
    buf: &mut B,
    offset: usize,
    k: u32,
    meter: &mut M,
) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let size = check_block(buf.len(), offset, k)?;
    leader_passes(buf, offset, 3, k, halve_mod(size + 1), meter);
    Ok(())
}

fn check_block(len: usize, offset: usize, k: u32) -> Result<usize> {
    let size = 3usize
        .checked_pow(k)
        .filter(|_| k >= 1)
        .map(|p| p - 1)
        .filter(|&s| offset.checked_add(s).is_some_and(|end| end <= len));
    size.ok_or(Error::InvalidRange {
        lo: offset,
        hi: offset.saturating_add(3usize.saturating_pow(k).saturating_sub(1)),
        dist: 0,
        len,
    })
}

// offset, remaining half n, block half m, exponent k
const LOOP_WORDS: u64 = 4;

/// Perfect in-shuffle: the element at 1-based `i` moves to `2i mod (len + 1)`.
pub fn in_shuffle<B, M>(buf: &mut B, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let total = buf.len();
    check_even(total, ShuffleKind::InShuffle)?;
    meter.acquire(LOOP_WORDS);
    for block in Blocks::new(total) {
        let n = (total - block.offset) / 2;
        if block.m < n {
            rotate_right_unchecked(
                buf,
                block.offset + block.m,
                block.offset + n + block.m,
                block.m,
                meter,
            );
        }
        leader_passes(
            buf,
            block.offset,
            3,
            block.k,
            double_mod(block.modulus()),
            meter,
        );
    }
    meter.release(LOOP_WORDS);
    Ok(())
}

/// Inverse of [`in_shuffle`].
///
/// Blocks are undone last to first. Each predecessor is found by replaying
/// the plan from the start, which keeps the extra space constant.
pub fn un_shuffle<B, M>(buf: &mut B, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let total = buf.len();
    check_even(total, ShuffleKind::InShuffle)?;
    meter.acquire(LOOP_WORDS + 1);
    let mut end = total;
    while end > 0 {
        let block = Blocks::ending_at(total, end);
        leader_passes(
            buf,
            block.offset,
            3,
            block.k,
            halve_mod(block.modulus()),
            meter,
        );
        let n = (total - block.offset) / 2;
        if block.m < n {
            rotate_right_unchecked(
                buf,
                block.offset + block.m,
                block.offset + n + block.m,
                n - block.m,
                meter,
            );
        }
        end = block.offset;
    }
    meter.release(LOOP_WORDS + 1);
    Ok(())
}

fn check_out(len: usize) -> Result<()> {
    if len < 2 {
        return Err(Error::InvalidLength {
            len,
            kind: ShuffleKind::OutShuffle.to_string(),
        });
    }
    check_even(len, ShuffleKind::OutShuffle)
}

/// Out-shuffle: first and last elements stay, the interior is in-shuffled.
pub fn out_shuffle<B, M>(buf: &mut B, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let len = buf.len();
    check_out(len)?;
    in_shuffle(&mut SubBuffer::new(buf, 1, len - 2), meter)
}

/// Inverse of [`out_shuffle`].
pub fn out_unshuffle<B, M>(buf: &mut B, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    let len = buf.len();
    check_out(len)?;
    un_shuffle(&mut SubBuffer::new(buf, 1, len - 2), meter)
}

/// Applies `kind` in place.
pub fn shuffle<B, M>(buf: &mut B, kind: ShuffleKind, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    match kind {
        ShuffleKind::InShuffle => in_shuffle(buf, meter),
        ShuffleKind::OutShuffle => out_shuffle(buf, meter),
        ShuffleKind::KWay(k) => kway::k_shuffle(buf, k, meter),
    }
}

/// Applies the inverse of `kind` in place.
pub fn unshuffle<B, M>(buf: &mut B, kind: ShuffleKind, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    match kind {
        ShuffleKind::InShuffle => un_shuffle(buf, meter),
        ShuffleKind::OutShuffle => out_unshuffle(buf, meter),
        ShuffleKind::KWay(k) => kway::k_unshuffle(buf, k, meter),
    }
}
