//! Out-of-place reference shuffles, written for obviousness rather than speed.

use crate::error::{Error, Result};
use crate::permcore::ShuffleKind;

/// Places `input[i - 1]` at `output[target(i) - 1]`.
pub fn oracle_shuffle<T: Clone>(input: &[T], kind: ShuffleKind) -> Result<Vec<T>> {
    let order = input.len();
    kind.validate(order)?;
    let mut out: Vec<Option<T>> = vec![None; order];
    for (i, x) in input.iter().enumerate() {
        out[kind.target(i + 1, order)? - 1] = Some(x.clone());
    }
    Ok(out
        .into_iter()
        .map(|x| x.expect("index map is a bijection"))
        .collect())
}

/// Inverse of [`oracle_shuffle`]: `output[i - 1] = input[target(i) - 1]`.
pub fn oracle_unshuffle<T: Clone>(input: &[T], kind: ShuffleKind) -> Result<Vec<T>> {
    let order = input.len();
    kind.validate(order)?;
    (1..=order)
        .map(|i| Ok(input[kind.target(i, order)? - 1].clone()))
        .collect()
}

/// `[s1, f1, s2, f2, ...]`: the second half leads.
pub fn oracle_interleave<T: Clone>(first_half: &[T], second_half: &[T]) -> Result<Vec<T>> {
    if first_half.len() != second_half.len() {
        return Err(Error::LengthMismatch(first_half.len(), second_half.len()));
    }
    Ok(second_half
        .iter()
        .zip(first_half)
        .flat_map(|(s, f)| [s.clone(), f.clone()])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ShuffleKind::*;

    #[test]
    fn shuffle_examples() {
        let a = ["a1", "a2", "a3", "a4", "a5", "a6"];
        assert_eq!(
            oracle_shuffle(&a, InShuffle).unwrap(),
            ["a4", "a1", "a5", "a2", "a6", "a3"]
        );
        assert_eq!(
            oracle_shuffle(&a, OutShuffle).unwrap(),
            ["a1", "a4", "a2", "a5", "a3", "a6"]
        );
        assert_eq!(oracle_shuffle(&['x', 'y'], InShuffle).unwrap(), ['y', 'x']);
        assert!(oracle_shuffle(&[1, 2, 3], InShuffle).is_err());
    }

    #[test]
    fn interleave_examples() {
        assert_eq!(
            oracle_interleave(&[1, 2, 3], &[4, 5, 6]).unwrap(),
            [4, 1, 5, 2, 6, 3]
        );
        assert_eq!(oracle_interleave::<u8>(&[], &[]).unwrap(), []);
        assert_eq!(oracle_interleave(&['a'], &['b']).unwrap(), ['b', 'a']);
        assert_eq!(
            oracle_interleave(&[1], &[2, 3]),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn k_way_deals_last_part_first() {
        let a: Vec<u32> = (1..=12).collect();
        // parts [1..4], [5..8], [9..12]
        assert_eq!(
            oracle_shuffle(&a, KWay(3)).unwrap(),
            [9, 5, 1, 10, 6, 2, 11, 7, 3, 12, 8, 4]
        );
    }

    #[test]
    fn two_formulations_agree() {
        for len in (2..=4096usize).step_by(2) {
            let v: Vec<u32> = (0..len as u32).collect();
            let (f, s) = v.split_at(len / 2);
            let placed = oracle_shuffle(&v, InShuffle).unwrap();
            assert_eq!(placed, oracle_interleave(f, s).unwrap(), "len {len}");
            let mut sorted = placed.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, v);
            assert_eq!(oracle_unshuffle(&placed, InShuffle).unwrap(), v);
        }
    }
}
