use std::fmt;

use crate::error::{Error, Result};

/// One Artin generator occurrence: `s<index>` or its inverse `S<index>`,
/// with `1 <= index <= strands - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(index: usize) -> Letter {
        Letter {
            index,
            inverse: false,
        }
    }

    pub fn inv(index: usize) -> Letter {
        Letter {
            index,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Letter {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "{}{}", if self.inverse { "S" } else { "s" }, self.index)
    }
}

/// A braid word on `strands` strands: a sequence of signed generators read
/// left to right in stacking order (the leftmost letter acts first). The
/// empty sequence is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> BraidWord {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        for l in &letters {
            if l.index == 0 || l.index + 1 > strands {
                return Err(Error::BadGenerator {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn generator(strands: usize, index: usize) -> Result<BraidWord> {
        BraidWord::new(strands, vec![Letter::gen(index)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Parses whitespace-separated `sK` / `SK` tokens.
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (inverse, digits) = match tok.strip_prefix('s') {
                Some(rest) => (false, rest),
                None => match tok.strip_prefix('S') {
                    Some(rest) => (true, rest),
                    None => {
                        return Err(Error::Malformed(format!(
                            "bad braid token `{tok}` (expected sK or SK)"
                        )))
                    }
                },
            };
            let index: usize = digits
                .parse()
                .map_err(|_| Error::Malformed(format!("bad braid token `{tok}`")))?;
            letters.push(Letter { index, inverse });
        }
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(w, "{}", parts.join(" "))
    }
}

/// Vertical stacking: `a` first, then `b` (group multiplication in B_n).
pub fn compose_braids(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch {
            a: a.strands,
            b: b.strands,
        });
    }
    let mut letters = a.letters.clone();
    letters.extend_from_slice(&b.letters);
    Ok(BraidWord {
        strands: a.strands,
        letters,
    })
}

/// Horizontal placement: `a`'s letters unchanged, `b`'s generator indices
/// shifted by `a.strands()`.
pub fn tensor_braids(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let mut letters = a.letters.clone();
    letters.extend(b.letters.iter().map(|l| Letter {
        index: l.index + a.strands,
        inverse: l.inverse,
    }));
    BraidWord {
        strands: a.strands + b.strands,
        letters,
    }
}

/// A permutation in one-line position-to-strand form: `perm[p]` is the
/// strand (start position) occupying final position `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Adjacent transposition at 0-based slot `i` (swaps positions i, i+1).
    pub fn transposition(n: usize, i: usize) -> Permutation {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, i + 1);
        Permutation(v)
    }

    /// Half-twist permutation (full reversal).
    pub fn half_twist(n: usize) -> Permutation {
        Permutation((0..n).rev().collect())
    }

    /// `self` stacked first, then `next`: result[p] = self[next[p]].
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(next.0.iter().map(|&p| self.0[p]).collect())
    }

    pub fn invert(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (p, &s) in self.0.iter().enumerate() {
            inv[s] = p;
        }
        Permutation(inv)
    }

    pub fn inversions(&self) -> usize {
        let n = self.0.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// One-line notation over 1-based entries, e.g. `(2 3 1)`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|&s| (s + 1).to_string()).collect();
        format!("({})", parts.join(" "))
    }
}

/// Strand tracking: the group homomorphism onto the symmetric group.
/// Signs do not matter for the underlying permutation.
pub fn permutation_of(word: &BraidWord) -> Permutation {
    let mut perm = Permutation::identity(word.strands());
    for l in word.letters() {
        perm.0.swap(l.index - 1, l.index);
    }
    perm
}

/// The crossing `c_{m,n}: m + n → n + m` taking the first `m` strands over
/// the remaining `n`, built by the two hexagon recursions (peeling the
/// first index and peeling the second); both expansions are checked to
/// agree and to induce the expected block-swap permutation.
pub fn braiding_word(m: usize, n: usize) -> BraidWord {
    let first = expand_first(m, n);
    let second = expand_second(m, n);
    debug_assert!(
        crate::braid::braids_equal(&first, &second).unwrap(),
        "hexagon expansions of c_{{{m},{n}}} disagree"
    );
    let perm = permutation_of(&second);
    let expected: Vec<usize> = (0..n).map(|j| m + j).chain(0..m).collect();
    debug_assert_eq!(perm.0, expected, "c_{{{m},{n}}} permutation mismatch");
    second
}

/// Peels the first index: c_{1+k, n} = (id_1 ⊗ c_{k,n}) then (c_{1,n} ⊗ id_k).
fn expand_first(m: usize, n: usize) -> BraidWord {
    if m == 0 || n == 0 {
        return BraidWord::identity(m + n);
    }
    if m == 1 {
        return one_over(n);
    }
    let inner = tensor_braids(&BraidWord::identity(1), &expand_first(m - 1, n));
    let outer = tensor_braids(&one_over(n), &BraidWord::identity(m - 1));
    compose_braids(&inner, &outer).expect("same strand count by construction")
}

/// Peels the second index: c_{m, k+1} = (c_{m,k} ⊗ id_1) then (id_k ⊗ c_{m,1}).
fn expand_second(m: usize, n: usize) -> BraidWord {
    if m == 0 || n == 0 {
        return BraidWord::identity(m + n);
    }
    if n == 1 {
        return many_over_one(m);
    }
    let inner = tensor_braids(&expand_second(m, n - 1), &BraidWord::identity(1));
    let outer = tensor_braids(&BraidWord::identity(n - 1), &many_over_one(m));
    compose_braids(&inner, &outer).expect("same strand count by construction")
}

/// c_{1,n}: one strand over n, the word s1 s2 ... sn.
fn one_over(n: usize) -> BraidWord {
    BraidWord::new(n + 1, (1..=n).map(Letter::gen).collect()).expect("indices in range")
}

/// c_{m,1}: m strands over one, the word sm s(m-1) ... s1.
fn many_over_one(m: usize) -> BraidWord {
    BraidWord::new(m + 1, (1..=m).rev().map(Letter::gen).collect()).expect("indices in range")
}
