//! Left-greedy Garside normal form for Artin braid groups: every braid is
//! written uniquely as Δ^k · p_1 ⋯ p_m with Δ the half twist, each p_i a
//! permutation braid distinct from the identity and from Δ, and each
//! adjacent pair left-greedy (the starting set of p_{i+1} is contained in
//! the finishing set of p_i). Words are equal in B_n exactly when their
//! normal forms coincide, which decides the defining relations
//! s_i s_j = s_j s_i (|i−j| ≥ 2) and s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}.

use std::fmt;

use crate::braid::word::{compose_braids, BraidWord, Letter, Permutation};
use crate::error::{Error, Result};

/// Canonical form Δ^inf · factors. Two braid words on the same strand
/// count are equal iff these agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn identity(strands: usize) -> Self {
        GarsideNormalForm {
            strands,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical word: Δ^inf spelled out (inverted and reversed when
    /// inf < 0) followed by one reduced word per factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = permutation_word(n, &Permutation::half_twist(n));
        let mut word = BraidWord::identity(n);
        if self.inf >= 0 {
            for _ in 0..self.inf {
                word = compose_braids(&word, &delta).expect("same strands");
            }
        } else {
            let delta_inv = delta.inverse();
            for _ in 0..(-self.inf) {
                word = compose_braids(&word, &delta_inv).expect("same strands");
            }
        }
        for f in &self.factors {
            word = compose_braids(&word, &permutation_word(n, f)).expect("same strands");
        }
        word
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "D^{}", self.inf)?;
        if !self.factors.is_empty() {
            let parts: Vec<String> = self.factors.iter().map(|f| f.one_line()).collect();
            write!(w, " | {}", parts.join(" . "))?;
        }
        Ok(())
    }
}

/// Reduced positive word for a permutation braid: strip descents from the
/// right, smallest slot first.
pub fn permutation_word(strands: usize, perm: &Permutation) -> BraidWord {
    let mut current = perm.clone();
    let mut reversed = Vec::new();
    loop {
        let descent = (0..strands.saturating_sub(1)).find(|&i| current.0[i] > current.0[i + 1]);
        match descent {
            None => break,
            Some(i) => {
                reversed.push(Letter::gen(i + 1));
                current.0.swap(i, i + 1);
            }
        }
    }
    reversed.reverse();
    BraidWord::new(strands, reversed).expect("slots in range")
}

/// Finishing set: slots i with p = p' · s_{i+1} for a positive p'.
fn finishing_descent(p: &Permutation, i: usize) -> bool {
    p.0[i] > p.0[i + 1]
}

/// Starting set: slots i with p = s_{i+1} · p' for a positive p'.
fn starting_descents(p: &Permutation) -> Vec<usize> {
    let inv = p.invert();
    (0..p.degree().saturating_sub(1))
        .filter(|&i| inv.0[i] > inv.0[i + 1])
        .collect()
}

/// Local left-greedy slide: move crossings from the head of `q` into the
/// tail of `p` while `p` stays a permutation braid. Afterwards the pair
/// satisfies S(q) ⊆ F(p). Returns true when anything moved.
fn slide(p: &mut Permutation, q: &mut Permutation) -> bool {
    let mut moved = false;
    loop {
        let candidate = starting_descents(q)
            .into_iter()
            .find(|&i| !finishing_descent(p, i));
        match candidate {
            None => return moved,
            Some(i) => {
                // p gains s_{i+1} on the right, q loses it on the left.
                p.0.swap(i, i + 1);
                let a = q.0.iter().position(|&s| s == i).expect("strand present");
                let b = q.0.iter().position(|&s| s == i + 1).expect("strand present");
                q.0.swap(a, b);
                moved = true;
            }
        }
    }
}

/// Computes the left-greedy normal form of a braid word.
pub fn normal_form(word: &BraidWord) -> GarsideNormalForm {
    let n = word.strands();
    if n < 2 {
        return GarsideNormalForm::identity(n);
    }
    let half_twist = Permutation::half_twist(n);

    // Rewrite letters into Δ-power times a sequence of permutation braids:
    // a positive letter is already simple; a negative letter s_i^{-1}
    // becomes Δ^{-1} · (Δ s_i^{-1}), and the Δ^{-1} migrates to the front
    // through the flip automorphism τ(x) = Δ^{-1} x Δ.
    let mut inf: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();
    for l in word.letters() {
        let slot = l.index - 1;
        if !l.inverse {
            factors.push(Permutation::transposition(n, slot));
        } else {
            inf -= 1;
            for f in &mut factors {
                *f = half_twist.then(f).then(&half_twist);
            }
            factors.push(half_twist.then(&Permutation::transposition(n, slot)));
        }
    }

    // Left-greedy passes until stable.
    factors.retain(|f| !f.is_identity());
    loop {
        let mut changed = false;
        if factors.len() >= 2 {
            for idx in 0..factors.len() - 1 {
                let (head, tail) = factors.split_at_mut(idx + 1);
                if slide(&mut head[idx], &mut tail[0]) {
                    changed = true;
                }
            }
        }
        factors.retain(|f| !f.is_identity());
        if !changed {
            break;
        }
    }

    // Left-greediness piles half twists at the front; absorb them into inf.
    let mut first_non_delta = 0;
    while first_non_delta < factors.len() && factors[first_non_delta] == half_twist {
        first_non_delta += 1;
    }
    inf += first_non_delta as i64;
    factors.drain(..first_non_delta);

    GarsideNormalForm {
        strands: n,
        inf,
        factors,
    }
}

/// Decides the braid word problem: equality modulo the Artin relations.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            a: a.strands(),
            b: b.strands(),
        });
    }
    Ok(normal_form(a) == normal_form(b))
}
