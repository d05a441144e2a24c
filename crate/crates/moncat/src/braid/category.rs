//! Truncated table export of the braid category: objects 0..max_n, and
//! for each object the braids representable by words with at most
//! `max_letters` letters. Hom-sets between distinct objects are exactly
//! empty (a theorem about the braid category, not an artifact of the
//! window); composites and tensors landing outside the window are recorded
//! as partial entries and refuse loudly when looked up, never silently
//! truncated.

use std::collections::BTreeMap;

use crate::braid::garside::{normal_form, GarsideNormalForm};
use crate::braid::word::{compose_braids, tensor_braids, BraidWord, Letter};
use crate::error::Result;
use crate::fincat::{FinMonCat, FinMonCatBuilder, PartialityReport};

#[derive(Debug)]
pub struct TruncatedBraidCategory {
    pub cat: FinMonCat,
    pub max_strands: usize,
    pub max_letters: usize,
    pub partiality: PartialityReport,
}

impl TruncatedBraidCategory {
    pub fn provenance(&self) -> serde_json::Value {
        serde_json::json!({
            "construction": "braid-truncation",
            "max_strands": self.max_strands,
            "max_letters": self.max_letters,
        })
    }
}

fn object_name(n: usize, width: usize) -> String {
    format!("{n:0width$}")
}

fn morphism_name(obj: &str, nf: &GarsideNormalForm) -> String {
    let word = nf.to_word();
    let tokens: Vec<String> = word.letters().iter().map(|l| l.to_string()).collect();
    format!("b{obj}:{}", tokens.join("."))
}

/// All distinct braids on `n` strands representable by words of length at
/// most `max_letters`, keyed by normal form.
fn window(n: usize, max_letters: usize) -> BTreeMap<GarsideNormalForm, BraidWord> {
    let mut seen: BTreeMap<GarsideNormalForm, BraidWord> = BTreeMap::new();
    let mut frontier = vec![BraidWord::identity(n)];
    seen.insert(normal_form(&frontier[0]), frontier[0].clone());
    for _ in 0..max_letters {
        let mut next = Vec::new();
        for word in &frontier {
            for index in 1..n {
                for inverse in [false, true] {
                    let mut letters = word.letters().to_vec();
                    letters.push(Letter { index, inverse });
                    let longer = BraidWord::new(n, letters).expect("index in range");
                    let nf = normal_form(&longer);
                    if !seen.contains_key(&nf) {
                        seen.insert(nf, longer.clone());
                        next.push(longer);
                    }
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Builds the truncated braid category with objects `0..=max_strands`.
pub fn braid_as_finmoncat(max_strands: usize, max_letters: usize) -> Result<TruncatedBraidCategory> {
    let width = object_name(max_strands, 1).len();
    let name_of = |n: usize| object_name(n, width);

    let mut windows: Vec<BTreeMap<GarsideNormalForm, BraidWord>> = Vec::new();
    for n in 0..=max_strands {
        windows.push(window(n, max_letters));
    }

    let mut b = FinMonCatBuilder::new();
    for n in 0..=max_strands {
        b.cat().object(name_of(n));
    }
    b.unit(name_of(0));

    // Morphisms: one representative per windowed braid; the empty braid is
    // the identity and keeps the auto-generated id name.
    let mor_name_of = |n: usize, nf: &GarsideNormalForm| -> String {
        if nf.is_identity() {
            format!("id_{}", name_of(n))
        } else {
            morphism_name(&name_of(n), nf)
        }
    };
    for (n, win) in windows.iter().enumerate() {
        for nf in win.keys() {
            if !nf.is_identity() {
                b.cat()
                    .morphism(mor_name_of(n, nf), name_of(n), name_of(n));
            }
        }
    }

    // Composition: braid product when it stays in the window.
    for (n, win) in windows.iter().enumerate() {
        for (nf_f, word_f) in win {
            for (nf_g, word_g) in win {
                if nf_f.is_identity() || nf_g.is_identity() {
                    continue;
                }
                // Categorical g ∘ f stacks f first.
                let product = compose_braids(word_f, word_g)?;
                let nf = normal_form(&product);
                let g_name = mor_name_of(n, nf_g);
                let f_name = mor_name_of(n, nf_f);
                if win.contains_key(&nf) {
                    b.cat().compose(g_name, f_name, mor_name_of(n, &nf));
                } else {
                    b.cat().truncated_compose(g_name, f_name);
                }
            }
        }
    }

    // Tensor on objects: addition, truncated above max_strands.
    for x in 0..=max_strands {
        for y in 0..=max_strands {
            if x + y <= max_strands {
                b.tensor_obj(name_of(x), name_of(y), name_of(x + y));
            } else {
                b.truncated_tensor_obj(name_of(x), name_of(y));
            }
        }
    }

    // Tensor on morphisms: horizontal placement when the result exists and
    // stays in the target window.
    for (x, win_x) in windows.iter().enumerate() {
        for (y, win_y) in windows.iter().enumerate() {
            if x + y > max_strands {
                continue; // already truncated at the object level
            }
            for (nf_f, word_f) in win_x {
                for (nf_g, word_g) in win_y {
                    if nf_f.is_identity() && nf_g.is_identity() {
                        continue;
                    }
                    let placed = tensor_braids(word_f, word_g);
                    let nf = normal_form(&placed);
                    let f_name = mor_name_of(x, nf_f);
                    let g_name = mor_name_of(y, nf_g);
                    if windows[x + y].contains_key(&nf) {
                        b.tensor_mor(f_name, g_name, mor_name_of(x + y, &nf));
                    } else {
                        b.truncated_tensor_mor(f_name, g_name);
                    }
                }
            }
        }
    }

    let cat = b.build()?;
    let partiality = cat.partiality();
    Ok(TruncatedBraidCategory {
        cat,
        max_strands,
        max_letters,
        partiality,
    })
}
