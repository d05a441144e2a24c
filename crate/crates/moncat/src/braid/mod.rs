//! The braid category B and the ribbon braid category B̃ as computable
//! monoidal categories: braid words with a decidable word problem via the
//! left-greedy Garside normal form, tensor and braiding structure, framed
//! braids, a truncated table export, and executable theorem checks.

mod category;
pub mod checks;
mod framed;
mod garside;
#[cfg(test)]
mod tests;
mod word;

pub use category::{braid_as_finmoncat, TruncatedBraidCategory};
pub use framed::{
    evaluate_ribbon_word, framed_compose, framed_equal, framed_inverse, framed_tensor,
    ribbon_generator, FramedBraid,
};
pub use garside::{braids_equal, normal_form, permutation_word, GarsideNormalForm};
pub use word::{
    braiding_word, compose_braids, permutation_of, tensor_braids, BraidWord, Letter, Permutation,
};
