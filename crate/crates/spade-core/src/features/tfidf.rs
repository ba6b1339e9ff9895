//! TF-IDF vectorizer fitted on training text only.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::text::word_tokens;
use super::FeatureError;

/// Vocabulary of the `max_vocab` most frequent training terms (ties broken
/// lexicographically), with smoothed idf weights:
/// `idf(t) = ln((1 + n_docs) / (1 + df(t))) + 1`.
///
/// Transformed rows are L2-normalized; unseen terms contribute nothing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TfidfModel {
    /// Terms in column order.
    pub terms: Vec<String>,
    pub doc_freq: Vec<usize>,
    pub idf: Vec<f64>,
    pub n_docs: usize,
    pub max_vocab: usize,
}

impl TfidfModel {
    pub fn fit<S: AsRef<str>>(train_texts: &[S], max_vocab: usize) -> Result<Self, FeatureError> {
        if max_vocab < 1 {
            return Err(FeatureError::BadVocabSize(max_vocab));
        }
        if train_texts.is_empty() {
            return Err(FeatureError::EmptyInput);
        }
        let mut total: HashMap<String, u64> = HashMap::new();
        let mut df: HashMap<String, usize> = HashMap::new();
        for text in train_texts {
            let tokens = word_tokens(text.as_ref());
            let mut seen: HashMap<&str, ()> = HashMap::new();
            for tok in &tokens {
                *total.entry(tok.clone()).or_insert(0) += 1;
                if seen.insert(tok, ()).is_none() {
                    *df.entry(tok.clone()).or_insert(0) += 1;
                }
            }
        }
        let mut ranked: Vec<(String, u64)> = total.into_iter().collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        ranked.truncate(max_vocab);

        let n_docs = train_texts.len();
        let terms: Vec<String> = ranked.into_iter().map(|(t, _)| t).collect();
        let doc_freq: Vec<usize> = terms.iter().map(|t| df[t]).collect();
        let idf: Vec<f64> = doc_freq
            .iter()
            .map(|&d| ((1 + n_docs) as f64 / (1 + d) as f64).ln() + 1.0)
            .collect();
        Ok(TfidfModel {
            terms,
            doc_freq,
            idf,
            n_docs,
            max_vocab,
        })
    }

    pub fn dimension(&self) -> usize {
        self.terms.len()
    }

    /// Raw term counts times idf, L2-normalized (zero rows stay zero).
    pub fn transform(&self, text: &str) -> Vec<f64> {
        let index: HashMap<&str, usize> = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_str(), i))
            .collect();
        let mut row = vec![0.0; self.terms.len()];
        for tok in word_tokens(text) {
            if let Some(&i) = index.get(tok.as_str()) {
                row[i] += self.idf[i];
            }
        }
        let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            for v in &mut row {
                *v /= norm;
            }
        }
        row
    }
}
