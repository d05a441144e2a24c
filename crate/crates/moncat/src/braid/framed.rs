//! Braids on ribbons, modelled as framed braids: an underlying braid word
//! plus one integer per ribbon counting its full 2π twists. Framings are
//! indexed by the ribbon's final position. The presentation generator
//! s_n of the ribbon braid group on n strands maps to the unit twist t_n
//! on the last ribbon; s_1 … s_{n−1} are the ordinary crossings.

use crate::braid::garside::braids_equal;
use crate::braid::word::{compose_braids, permutation_of, tensor_braids, BraidWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedBraid {
    pub word: BraidWord,
    /// `framings[p]` = net twists on the ribbon ending at position `p`.
    pub framings: Vec<i64>,
}

impl FramedBraid {
    pub fn identity(strands: usize) -> FramedBraid {
        FramedBraid {
            word: BraidWord::identity(strands),
            framings: vec![0; strands],
        }
    }

    pub fn from_word(word: BraidWord) -> FramedBraid {
        let framings = vec![0; word.strands()];
        FramedBraid { word, framings }
    }

    /// Unit twist on the ribbon at position `pos` (1-based), empty braid.
    pub fn twist(strands: usize, pos: usize) -> Result<FramedBraid> {
        if pos == 0 || pos > strands {
            return Err(Error::BadGenerator {
                index: pos,
                strands,
            });
        }
        let mut framings = vec![0; strands];
        framings[pos - 1] = 1;
        Ok(FramedBraid {
            word: BraidWord::identity(strands),
            framings,
        })
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }
}

/// Evaluates the ribbon presentation generator `s_i` on `n` strands:
/// a crossing for i < n, the unit twist t_n for i = n.
pub fn ribbon_generator(strands: usize, index: usize) -> Result<FramedBraid> {
    if index == strands {
        FramedBraid::twist(strands, strands)
    } else {
        Ok(FramedBraid::from_word(BraidWord::generator(
            strands, index,
        )?))
    }
}

/// Vertical stacking. The second braid permutes where the first one's
/// twists end up: a ribbon finishing at position p entered `b` at the
/// position recorded by `b`'s strand tracking.
pub fn framed_compose(a: &FramedBraid, b: &FramedBraid) -> Result<FramedBraid> {
    let word = compose_braids(&a.word, &b.word)?;
    let perm_b = permutation_of(&b.word);
    let framings = (0..a.framings.len())
        .map(|p| b.framings[p] + a.framings[perm_b.0[p]])
        .collect();
    Ok(FramedBraid { word, framings })
}

/// Horizontal placement: words tensor, framing vectors concatenate.
pub fn framed_tensor(a: &FramedBraid, b: &FramedBraid) -> FramedBraid {
    let word = tensor_braids(&a.word, &b.word);
    let mut framings = a.framings.clone();
    framings.extend_from_slice(&b.framings);
    FramedBraid { word, framings }
}

/// Equality in the ribbon braid group: underlying words equal in B_n and
/// framing vectors identical.
pub fn framed_equal(a: &FramedBraid, b: &FramedBraid) -> Result<bool> {
    if a.framings.len() != b.framings.len() {
        return Err(Error::StrandMismatch {
            a: a.framings.len(),
            b: b.framings.len(),
        });
    }
    Ok(a.framings == b.framings && braids_equal(&a.word, &b.word)?)
}

/// Evaluates a word in the ribbon presentation generators (signed indices
/// 1..=n, with n meaning the twist) to the framed model.
pub fn evaluate_ribbon_word(strands: usize, letters: &[(usize, bool)]) -> Result<FramedBraid> {
    let mut acc = FramedBraid::identity(strands);
    for &(index, inverse) in letters {
        let gen = ribbon_generator(strands, index)?;
        let step = if inverse { framed_inverse(&gen) } else { gen };
        acc = framed_compose(&acc, &step)?;
    }
    Ok(acc)
}

pub fn framed_inverse(a: &FramedBraid) -> FramedBraid {
    let word = a.word.inverse();
    // Ribbon ending at p in the inverse started there in `a`; its twist is
    // undone. Start position of the ribbon ending at p in a^{-1} equals
    // the final position it had in `a`.
    let perm = permutation_of(&a.word);
    let framings = (0..a.framings.len())
        .map(|p| -a.framings[perm.invert().0[p]])
        .collect();
    FramedBraid { word, framings }
}
