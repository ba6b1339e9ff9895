//! Per-dialogue feature extraction from user utterances only.
//!
//! The scalar schema is fixed and versioned: changing any feature definition
//! or the order below requires bumping [`SCHEMA_VERSION`]. Extraction is a
//! pure function of the user-turn text — system utterances never influence a
//! vector.

pub mod lexicons;
pub mod scale;
pub mod select;
pub mod text;
pub mod tfidf;

use std::collections::HashMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{Dialogue, Speaker};

pub use scale::Scaler;
pub use select::{f_scores, f_test_select, project};
pub use tfidf::TfidfModel;

/// Version tag embedded in saved models and CSV exports.
pub const SCHEMA_VERSION: &str = "v1";

#[derive(Debug, Error)]
pub enum FeatureError {
    #[error("dialogue has no user turns")]
    NoUserTurns,
    #[error("input rows are empty")]
    EmptyInput,
    #[error("rows have inconsistent lengths")]
    RaggedRows,
    #[error("tf-idf vocabulary size must be >= 1, got {0}")]
    BadVocabSize(usize),
    #[error("selection size k = {k} out of range for {columns} columns")]
    BadSelectionSize { k: usize, columns: usize },
    #[error("labels contain a single class; need at least two")]
    SingleClass,
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FeatureCategory {
    Sentiment,
    Errors,
    Readability,
    Statistic,
    ListLookup,
    Document,
    TextVector,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureDescriptor {
    pub name: String,
    pub category: FeatureCategory,
}

/// Ordered, versioned feature schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSchema {
    pub version: String,
    pub descriptors: Vec<FeatureDescriptor>,
}

/// Feature values aligned to a schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub dialogue_id: String,
    pub values: Vec<f64>,
}

use FeatureCategory::*;

/// Scalar feature names, categories, and extraction order. The TextVector
/// block, when present, follows these.
const SCALAR_TABLE: &[(&str, FeatureCategory)] = &[
    ("sentiment_positive_count", Sentiment),
    ("sentiment_negative_count", Sentiment),
    ("sentiment_polarity_ratio", Sentiment),
    ("sentiment_positive_rate", Sentiment),
    ("sentiment_negative_rate", Sentiment),
    ("error_dict_miss_count", Errors),
    ("error_dict_miss_rate", Errors),
    ("error_repeated_punct_count", Errors),
    ("error_repeated_char_count", Errors),
    ("read_flesch_ease", Readability),
    ("read_fk_grade", Readability),
    ("read_avg_word_len", Readability),
    ("read_avg_syllables_per_word", Readability),
    ("read_long_word_ratio", Readability),
    ("read_monosyllable_ratio", Readability),
    ("read_polysyllable_ratio", Readability),
    ("stat_char_count", Statistic),
    ("stat_word_count", Statistic),
    ("stat_type_token_ratio", Statistic),
    ("stat_unique_word_count", Statistic),
    ("stat_hapax_count", Statistic),
    ("stat_hapax_ratio", Statistic),
    ("stat_stopword_count", Statistic),
    ("stat_stopword_ratio", Statistic),
    ("stat_digit_ratio", Statistic),
    ("stat_uppercase_ratio", Statistic),
    ("stat_punct_count", Statistic),
    ("stat_punct_ratio", Statistic),
    ("stat_sentence_count", Statistic),
    ("stat_mean_sentence_len_words", Statistic),
    ("list_function_word_count", ListLookup),
    ("list_function_word_ratio", ListLookup),
    ("list_discourse_marker_count", ListLookup),
    ("list_discourse_marker_ratio", ListLookup),
    ("list_contraction_count", ListLookup),
    ("list_contraction_ratio", ListLookup),
    ("list_first_person_count", ListLookup),
    ("list_first_person_ratio", ListLookup),
    ("doc_utterance_count", Document),
    ("doc_mean_utterance_words", Document),
    ("doc_std_utterance_words", Document),
    ("doc_min_utterance_words", Document),
    ("doc_max_utterance_words", Document),
    ("doc_mean_utterance_chars", Document),
    ("doc_std_utterance_chars", Document),
    ("drv_words_per_utterance", Derived),
    ("drv_chars_per_utterance", Derived),
    ("drv_positive_per_utterance", Derived),
    ("drv_negative_per_utterance", Derived),
    ("drv_dict_miss_per_utterance", Derived),
    ("drv_repeated_punct_per_utterance", Derived),
    ("drv_stopwords_per_utterance", Derived),
    ("drv_function_words_per_utterance", Derived),
    ("drv_discourse_markers_per_utterance", Derived),
    ("drv_contractions_per_utterance", Derived),
    ("drv_punct_per_utterance", Derived),
];

impl FeatureSchema {
    /// The scalar schema without a text-vector block.
    pub fn scalar() -> Self {
        FeatureSchema {
            version: SCHEMA_VERSION.to_string(),
            descriptors: SCALAR_TABLE
                .iter()
                .map(|&(name, category)| FeatureDescriptor {
                    name: name.to_string(),
                    category,
                })
                .collect(),
        }
    }

    /// Scalar schema plus `dim` TF-IDF columns.
    pub fn with_tfidf(dim: usize) -> Self {
        let mut schema = Self::scalar();
        schema
            .descriptors
            .extend((0..dim).map(|i| FeatureDescriptor {
                name: format!("tfidf_{i:04}"),
                category: TextVector,
            }));
        schema
    }

    /// An empty schema (zero-length vectors).
    pub fn empty() -> Self {
        FeatureSchema {
            version: SCHEMA_VERSION.to_string(),
            descriptors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.descriptors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.descriptors.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.descriptors.iter().map(|d| d.name.as_str()).collect()
    }

    pub fn text_vector_len(&self) -> usize {
        self.descriptors
            .iter()
            .filter(|d| d.category == TextVector)
            .count()
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if den > 0.0 {
        num / den
    } else {
        0.0
    }
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

fn scalar_values(utterances: &[&str]) -> HashMap<&'static str, f64> {
    let per_utt_words: Vec<Vec<String>> =
        utterances.iter().map(|u| text::word_tokens(u)).collect();
    let words: Vec<&str> = per_utt_words
        .iter()
        .flat_map(|w| w.iter().map(|s| s.as_str()))
        .collect();
    let word_count = words.len() as f64;
    let n_utt = utterances.len() as f64;

    let mut counts: HashMap<&str, usize> = HashMap::new();
    for w in &words {
        *counts.entry(w).or_insert(0) += 1;
    }
    let unique = counts.len() as f64;
    let hapax = counts.values().filter(|&&c| c == 1).count() as f64;

    let count_in = |set: &std::collections::HashSet<&'static str>| {
        words.iter().filter(|w| set.contains(**w)).count() as f64
    };
    let positive = count_in(lexicons::positive_words());
    let negative = count_in(lexicons::negative_words());
    let stopwords = count_in(lexicons::stopwords());
    let function_words = count_in(lexicons::function_words());
    let discourse = count_in(lexicons::discourse_markers());
    let first_person = count_in(lexicons::first_person());
    let dict = lexicons::dictionary();
    let dict_miss = words
        .iter()
        .filter(|w| !dict.contains(**w) && !w.chars().all(|c| c.is_numeric()))
        .count() as f64;

    let mut char_count = 0.0;
    let mut letters = 0.0;
    let mut uppercase = 0.0;
    let mut digits = 0.0;
    let mut sentences = 0.0;
    let mut punct_chars = 0.0;
    let mut repeated_punct = 0.0;
    let mut contractions = 0.0;
    let mut utt_word_lens = Vec::with_capacity(utterances.len());
    let mut utt_char_lens = Vec::with_capacity(utterances.len());
    for (u, toks) in utterances.iter().zip(&per_utt_words) {
        let chars = u.chars().count() as f64;
        char_count += chars;
        utt_char_lens.push(chars);
        utt_word_lens.push(toks.len() as f64);
        for c in u.chars() {
            if c.is_alphabetic() {
                letters += 1.0;
                if c.is_uppercase() {
                    uppercase += 1.0;
                }
            } else if c.is_numeric() {
                digits += 1.0;
            }
        }
        sentences += text::sentence_count(u) as f64;
        for run in text::punct_runs(u) {
            punct_chars += run.chars().count() as f64;
            let mut it = run.chars();
            let first = it.next();
            if run.chars().count() >= 2 && it.all(|c| Some(c) == first) {
                repeated_punct += 1.0;
            }
        }
        contractions += text::contraction_count(u) as f64;
    }

    let repeated_chars = words
        .iter()
        .filter(|w| {
            w.chars()
                .collect::<Vec<_>>()
                .windows(3)
                .any(|t| t[0] == t[1] && t[1] == t[2] && t[0].is_alphabetic())
        })
        .count() as f64;

    let word_chars: f64 = words.iter().map(|w| w.chars().count() as f64).sum();
    let syllable_total: f64 = words.iter().map(|w| text::syllables(w) as f64).sum();
    let monosyllables = words.iter().filter(|w| text::syllables(w) == 1).count() as f64;
    let polysyllables = words.iter().filter(|w| text::syllables(w) >= 3).count() as f64;
    let long_words = words.iter().filter(|w| w.chars().count() >= 7).count() as f64;

    let wps = ratio(word_count, sentences);
    let spw = ratio(syllable_total, word_count);
    let flesch = if word_count > 0.0 && sentences > 0.0 {
        206.835 - 1.015 * wps - 84.6 * spw
    } else {
        0.0
    };
    let fk_grade = if word_count > 0.0 && sentences > 0.0 {
        0.39 * wps + 11.8 * spw - 15.59
    } else {
        0.0
    };

    let (utt_words_mean, utt_words_std) = mean_std(&utt_word_lens);
    let (utt_chars_mean, utt_chars_std) = mean_std(&utt_char_lens);
    let utt_words_min = utt_word_lens.iter().cloned().fold(f64::INFINITY, f64::min);
    let utt_words_max = utt_word_lens
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);

    let polarity = if positive + negative > 0.0 {
        positive / (positive + negative)
    } else {
        0.5
    };

    let mut out: HashMap<&'static str, f64> = HashMap::new();
    let mut put = |name: &'static str, value: f64| {
        out.insert(name, value);
    };
    put("sentiment_positive_count", positive);
    put("sentiment_negative_count", negative);
    put("sentiment_polarity_ratio", polarity);
    put("sentiment_positive_rate", ratio(positive, word_count));
    put("sentiment_negative_rate", ratio(negative, word_count));
    put("error_dict_miss_count", dict_miss);
    put("error_dict_miss_rate", ratio(dict_miss, word_count));
    put("error_repeated_punct_count", repeated_punct);
    put("error_repeated_char_count", repeated_chars);
    put("read_flesch_ease", flesch);
    put("read_fk_grade", fk_grade);
    put("read_avg_word_len", ratio(word_chars, word_count));
    put("read_avg_syllables_per_word", spw);
    put("read_long_word_ratio", ratio(long_words, word_count));
    put("read_monosyllable_ratio", ratio(monosyllables, word_count));
    put("read_polysyllable_ratio", ratio(polysyllables, word_count));
    put("stat_char_count", char_count);
    put("stat_word_count", word_count);
    put("stat_type_token_ratio", ratio(unique, word_count));
    put("stat_unique_word_count", unique);
    put("stat_hapax_count", hapax);
    put("stat_hapax_ratio", ratio(hapax, word_count));
    put("stat_stopword_count", stopwords);
    put("stat_stopword_ratio", ratio(stopwords, word_count));
    put("stat_digit_ratio", ratio(digits, char_count));
    put("stat_uppercase_ratio", ratio(uppercase, letters));
    put("stat_punct_count", punct_chars);
    put("stat_punct_ratio", ratio(punct_chars, char_count));
    put("stat_sentence_count", sentences);
    put("stat_mean_sentence_len_words", wps);
    put("list_function_word_count", function_words);
    put("list_function_word_ratio", ratio(function_words, word_count));
    put("list_discourse_marker_count", discourse);
    put("list_discourse_marker_ratio", ratio(discourse, word_count));
    put("list_contraction_count", contractions);
    put("list_contraction_ratio", ratio(contractions, word_count));
    put("list_first_person_count", first_person);
    put("list_first_person_ratio", ratio(first_person, word_count));
    put("doc_utterance_count", n_utt);
    put("doc_mean_utterance_words", utt_words_mean);
    put("doc_std_utterance_words", utt_words_std);
    put(
        "doc_min_utterance_words",
        if utt_words_min.is_finite() { utt_words_min } else { 0.0 },
    );
    put(
        "doc_max_utterance_words",
        if utt_words_max.is_finite() { utt_words_max } else { 0.0 },
    );
    put("doc_mean_utterance_chars", utt_chars_mean);
    put("doc_std_utterance_chars", utt_chars_std);
    put("drv_words_per_utterance", ratio(word_count, n_utt));
    put("drv_chars_per_utterance", ratio(char_count, n_utt));
    put("drv_positive_per_utterance", ratio(positive, n_utt));
    put("drv_negative_per_utterance", ratio(negative, n_utt));
    put("drv_dict_miss_per_utterance", ratio(dict_miss, n_utt));
    put(
        "drv_repeated_punct_per_utterance",
        ratio(repeated_punct, n_utt),
    );
    put("drv_stopwords_per_utterance", ratio(stopwords, n_utt));
    put(
        "drv_function_words_per_utterance",
        ratio(function_words, n_utt),
    );
    put(
        "drv_discourse_markers_per_utterance",
        ratio(discourse, n_utt),
    );
    put("drv_contractions_per_utterance", ratio(contractions, n_utt));
    put("drv_punct_per_utterance", ratio(punct_chars, n_utt));
    out
}

/// Extracts the schema's features from the dialogue's user utterances.
///
/// `tfidf` must be present exactly when the schema contains TextVector
/// descriptors, and its dimension must match their count.
pub fn extract_features(
    d: &Dialogue,
    schema: &FeatureSchema,
    tfidf: Option<&TfidfModel>,
) -> Result<FeatureVector, FeatureError> {
    let utts: Vec<&str> = d
        .turns
        .iter()
        .filter(|t| t.speaker == Speaker::User)
        .map(|t| t.text.as_str())
        .collect();
    if utts.is_empty() {
        return Err(FeatureError::NoUserTurns);
    }

    let tv_len = schema.text_vector_len();
    match (tv_len, tfidf) {
        (0, Some(_)) => {
            return Err(FeatureError::SchemaMismatch(
                "tf-idf model supplied but schema has no TextVector block".into(),
            ))
        }
        (n, None) if n > 0 => {
            return Err(FeatureError::SchemaMismatch(
                "schema has a TextVector block but no tf-idf model supplied".into(),
            ))
        }
        (n, Some(m)) if n > 0 && m.dimension() != n => {
            return Err(FeatureError::SchemaMismatch(format!(
                "schema expects {n} TextVector columns, model provides {}",
                m.dimension()
            )))
        }
        _ => {}
    }

    let scalars = scalar_values(&utts);
    let tfidf_row = tfidf.map(|m| m.transform(&utts.join(" ")));
    let mut tfidf_iter = tfidf_row.iter().flat_map(|r| r.iter().copied());

    let mut values = Vec::with_capacity(schema.len());
    for desc in &schema.descriptors {
        let v = if desc.category == TextVector {
            tfidf_iter
                .next()
                .ok_or_else(|| FeatureError::SchemaMismatch("TextVector block exhausted".into()))?
        } else {
            *scalars.get(desc.name.as_str()).ok_or_else(|| {
                FeatureError::SchemaMismatch(format!("unknown feature {:?}", desc.name))
            })?
        };
        debug_assert!(v.is_finite(), "{} produced a non-finite value", desc.name);
        values.push(v);
    }
    Ok(FeatureVector {
        dialogue_id: d.id.clone(),
        values,
    })
}

/// Writes feature rows as CSV with a `dialogue_id` column followed by the
/// schema's feature names.
pub fn write_features_csv(
    path: impl AsRef<Path>,
    schema: &FeatureSchema,
    rows: &[FeatureVector],
) -> Result<(), FeatureError> {
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    write!(w, "dialogue_id")?;
    for name in schema.names() {
        write!(w, ",{name}")?;
    }
    writeln!(w)?;
    for row in rows {
        write!(w, "{}", row.dialogue_id)?;
        for v in &row.values {
            write!(w, ",{v}")?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{OriginLabel, Turn};

    fn user_dialogue(texts: &[&str]) -> Dialogue {
        let mut turns = Vec::new();
        for (i, t) in texts.iter().enumerate() {
            turns.push(Turn::user(*t));
            if i + 1 < texts.len() {
                turns.push(Turn::system(format!("sys {i}")));
            }
        }
        Dialogue::new("t", None, turns, OriginLabel::human(), None).unwrap()
    }

    fn value(fv: &FeatureVector, schema: &FeatureSchema, name: &str) -> f64 {
        let i = schema
            .descriptors
            .iter()
            .position(|d| d.name == name)
            .unwrap();
        fv.values[i]
    }

    #[test]
    fn flesch_matches_hand_computation() {
        let schema = FeatureSchema::scalar();
        let d = user_dialogue(&["The cat sat."]);
        let fv = extract_features(&d, &schema, None).unwrap();
        assert_eq!(value(&fv, &schema, "stat_word_count"), 3.0);
        assert_eq!(value(&fv, &schema, "stat_sentence_count"), 1.0);
        let flesch = value(&fv, &schema, "read_flesch_ease");
        assert!((flesch - 119.19).abs() <= 1e-9, "flesch = {flesch}");
    }

    #[test]
    fn type_token_ratio_direct_count() {
        let schema = FeatureSchema::scalar();
        let d = user_dialogue(&["a a a a"]);
        let fv = extract_features(&d, &schema, None).unwrap();
        assert_eq!(value(&fv, &schema, "stat_type_token_ratio"), 0.25);
    }

    #[test]
    fn empty_schema_gives_zero_length_vector() {
        let d = user_dialogue(&["hello"]);
        let fv = extract_features(&d, &FeatureSchema::empty(), None).unwrap();
        assert!(fv.values.is_empty());
    }

    #[test]
    fn rejects_dialogue_without_user_turns() {
        let d = Dialogue::new(
            "s",
            None,
            vec![Turn::system("welcome")],
            OriginLabel::human(),
            None,
        )
        .unwrap();
        assert!(matches!(
            extract_features(&d, &FeatureSchema::scalar(), None),
            Err(FeatureError::NoUserTurns)
        ));
    }

    #[test]
    fn system_turns_never_affect_the_vector() {
        let schema = FeatureSchema::scalar();
        let a = user_dialogue(&["i need a cheap hotel", "book it please"]);
        let mut b = a.clone();
        for t in &mut b.turns {
            if t.speaker == Speaker::System {
                t.text = "ZZZZ completely different !!!".into();
            }
        }
        let fa = extract_features(&a, &schema, None).unwrap();
        let fb = extract_features(&b, &schema, None).unwrap();
        assert_eq!(fa.values, fb.values);
    }

    #[test]
    fn tfidf_block_requires_model() {
        let d = user_dialogue(&["hello there"]);
        let schema = FeatureSchema::with_tfidf(4);
        assert!(matches!(
            extract_features(&d, &schema, None),
            Err(FeatureError::SchemaMismatch(_))
        ));
    }

    #[test]
    fn all_values_finite_on_awkward_input() {
        let schema = FeatureSchema::scalar();
        for texts in [vec![""], vec!["!!!"], vec!["42"], vec!["", "ok then"]] {
            let d = user_dialogue(&texts);
            let fv = extract_features(&d, &schema, None).unwrap();
            assert!(fv.values.iter().all(|v| v.is_finite()), "{texts:?}");
        }
    }

    #[test]
    fn csv_export_has_header_and_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.csv");
        let schema = FeatureSchema::scalar();
        let d = user_dialogue(&["hi there"]);
        let fv = extract_features(&d, &schema, None).unwrap();
        write_features_csv(&path, &schema, &[fv]).unwrap();
        let content = std::fs::read_to_string(&path).unwrap();
        let mut lines = content.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("dialogue_id,sentiment_positive_count,"));
        assert_eq!(lines.count(), 1);
    }
}
