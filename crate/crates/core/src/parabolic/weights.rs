use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{Field, Q};

/// Parabolic weights w ∈ [0, 1]ⁿ.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights(Vec<Q>);

impl Weights {
    pub fn new(w: Vec<Q>) -> Result<Self> {
        for (i, x) in w.iter().enumerate() {
            if x.is_negative() || *x > Q::one() {
                return Err(Error::InvalidInput(format!("weight {} = {x} outside [0, 1]", i + 1)));
            }
        }
        Ok(Weights(w))
    }

    pub fn democratic(n: usize, w: Q) -> Result<Self> {
        Weights::new(vec![w; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &Q {
        &self.0[i]
    }

    pub fn as_slice(&self) -> &[Q] {
        &self.0
    }

    /// wᵢ ↦ 1 − wᵢ, the effect of an elementary transformation at i.
    pub fn flip(&self, i: usize) -> Weights {
        let mut w = self.0.clone();
        w[i] = Q::one() - w[i].clone();
        Weights(w)
    }

    /// Σ_{i∉I} wᵢ − Σ_{i∈I} wᵢ for the index set encoded in `mask`.
    pub(crate) fn signed_sum(&self, mask: u64) -> Q {
        self.0.iter().enumerate().fold(Q::zero(), |acc, (i, x)| {
            if mask >> i & 1 == 1 {
                acc - x.clone()
            } else {
                acc + x.clone()
            }
        })
    }
}
