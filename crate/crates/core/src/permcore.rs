//! Index maps for the shuffle families and their cycle structure.
//!
//! Positions at this layer are 1-based: an array of `2n` elements is
//! indexed `1..=2n`, and the in-shuffle sends position `i` to
//! `2i mod (2n + 1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::gcd;

/// Which perfect-shuffle permutation to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShuffleKind {
    /// First card of the second half ends up on top.
    InShuffle,
    /// First card stays on top; last card stays at the bottom.
    OutShuffle,
    /// `k` equal parts interleaved, last part first. `KWay(2)` is the in-shuffle.
    KWay(usize),
}

impl ShuffleKind {
    /// Checks that `order` elements can be permuted by this kind.
    pub fn validate(self, order: usize) -> Result<()> {
        let ok = match self {
            ShuffleKind::InShuffle | ShuffleKind::OutShuffle => order >= 2 && order % 2 == 0,
            ShuffleKind::KWay(k) => k >= 2 && order >= k && order % k == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLength {
                len: order,
                kind: self.to_string(),
            })
        }
    }

    /// Destination of the element at 1-based position `i`.
    pub fn target(self, i: usize, order: usize) -> Result<usize> {
        match self {
            ShuffleKind::InShuffle => in_target(i, order),
            ShuffleKind::OutShuffle => out_target(i, order),
            ShuffleKind::KWay(k) => k_target(i, order, k),
        }
    }
}

impl fmt::Display for ShuffleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShuffleKind::InShuffle => f.write_str("in"),
            ShuffleKind::OutShuffle => f.write_str("out"),
            ShuffleKind::KWay(k) => write!(f, "k:{k}"),
        }
    }
}

impl FromStr for ShuffleKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "in" => Ok(ShuffleKind::InShuffle),
            "out" => Ok(ShuffleKind::OutShuffle),
            _ => {
                let k = s
                    .strip_prefix("k:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| format!("expected `in`, `out` or `k:<k>`, got `{s}`"))?;
                if k < 2 {
                    return Err(format!("k must be at least 2, got {k}"));
                }
                Ok(ShuffleKind::KWay(k))
            }
        }
    }
}

fn check_position(i: usize, order: usize) -> Result<()> {
    if i == 0 || i > order {
        return Err(Error::PositionOutOfRange { pos: i, order });
    }
    Ok(())
}

#[inline]
fn mul_mod(a: usize, b: usize, m: usize) -> usize {
    ((a as u128 * b as u128) % m as u128) as usize
}

pub fn in_target(i: usize, order: usize) -> Result<usize> {
    ShuffleKind::InShuffle.validate(order)?;
    check_position(i, order)?;
    Ok(mul_mod(2, i, order + 1))
}

/// Out-shuffle: the ends are fixed and the interior `order - 2` positions
/// undergo an in-shuffle.
pub fn out_target(i: usize, order: usize) -> Result<usize> {
    ShuffleKind::OutShuffle.validate(order)?;
    check_position(i, order)?;
    if i == 1 || i == order {
        return Ok(i);
    }
    Ok(1 + in_target(i - 1, order - 2)?)
}

pub fn k_target(i: usize, order: usize, k: usize) -> Result<usize> {
    ShuffleKind::KWay(k).validate(order)?;
    check_position(i, order)?;
    Ok(mul_mod(k, i, order + 1))
}

/// Disjoint cycles of a permutation of `1..=order`, fixed points omitted.
///
/// Each cycle starts at its smallest element; cycles are sorted by that
/// leader.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub order: usize,
}

impl CycleDecomposition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn leaders(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles.iter().map(|c| c[0])
    }

    pub fn fixed_points(&self) -> usize {
        self.order - self.cycles.iter().map(Vec::len).sum::<usize>()
    }

    /// Least common multiple of the cycle lengths.
    pub fn lcm(&self) -> u64 {
        self.cycles.iter().fold(1u64, |acc, c| {
            let len = c.len() as u64;
            acc / gcd(acc, len) * len
        })
    }
}

/// Finds every cycle by visited-marking traversal. Uses `O(order)` space.
pub fn cycle_decomposition(kind: ShuffleKind, order: usize) -> Result<CycleDecomposition> {
    kind.validate(order)?;
    let mut visited = vec![false; order + 1];
    let mut cycles = Vec::new();
    for leader in 1..=order {
        if visited[leader] {
            continue;
        }
        let mut cycle = vec![leader];
        visited[leader] = true;
        let mut j = kind.target(leader, order)?;
        while j != leader {
            visited[j] = true;
            cycle.push(j);
            j = kind.target(j, order)?;
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }
    Ok(CycleDecomposition { cycles, order })
}

/// Number of applications after which the permutation is the identity.
pub fn permutation_order(kind: ShuffleKind, order: usize) -> Result<u64> {
    Ok(cycle_decomposition(kind, order)?.lcm())
}
