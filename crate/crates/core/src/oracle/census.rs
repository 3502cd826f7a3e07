use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Counts of shapes by half-perimeter, plus a refinement by some boundary
/// statistic `K` (top width, top gate row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census<K: Ord> {
    counts: Vec<u64>,
    refined: BTreeMap<(usize, K), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub hp: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub object: String,
    pub counts: Vec<CountJson>,
}

impl<K: Ord> Census<K> {
    pub(crate) fn new(max_hp: usize) -> Self {
        Census {
            counts: vec![0; max_hp + 1],
            refined: BTreeMap::new(),
        }
    }

    pub(crate) fn record(&mut self, hp: usize, key: K, n: u64) {
        if hp < self.counts.len() {
            self.counts[hp] += n;
            *self.refined.entry((hp, key)).or_insert(0) += n;
        }
    }

    pub fn max_hp(&self) -> usize {
        self.counts.len() - 1
    }

    /// Counts indexed by half-perimeter `0..=max_hp`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, hp: usize) -> u64 {
        self.counts.get(hp).copied().unwrap_or(0)
    }

    pub fn refined(&self) -> &BTreeMap<(usize, K), u64> {
        &self.refined
    }

    pub fn refined_count(&self, hp: usize, key: K) -> u64 {
        self.refined.get(&(hp, key)).copied().unwrap_or(0)
    }

    /// Smallest half-perimeter with a nonzero count.
    pub fn first_hp(&self) -> Option<usize> {
        self.counts.iter().position(|&c| c > 0)
    }

    /// Entries from the first nonzero count up to `max_hp`.
    pub fn to_json_value(&self, object: &str) -> CensusJson {
        let start = self.first_hp().unwrap_or(self.counts.len());
        CensusJson {
            object: object.to_string(),
            counts: (start..self.counts.len())
                .map(|hp| CountJson {
                    hp,
                    count: self.counts[hp],
                })
                .collect(),
        }
    }

    pub fn to_json(&self, object: &str) -> String {
        serde_json::to_string(&self.to_json_value(object)).expect("serializable")
    }

    /// b-file lines starting at the first nonzero count, which gets index
    /// `offset`.
    pub fn to_bfile(&self, offset: usize) -> String {
        let start = self.first_hp().unwrap_or(self.counts.len());
        bfile(self.counts[start..].iter(), offset)
    }
}

/// "index value" lines, newline-terminated, indices consecutive from `offset`.
pub fn bfile<T: std::fmt::Display>(values: impl IntoIterator<Item = T>, offset: usize) -> String {
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| format!("{} {}\n", offset + i, v))
        .collect()
}
