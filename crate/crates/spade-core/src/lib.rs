//! Synthetic customer-service dialogue augmentation and chatbot-user detection.
//!
//! The crate is organized around the stages of a detection experiment:
//!
//! - [`corpus`] — dialogue data model, plain-text and JSONL parsing,
//!   structural transforms (crop / blank / placeholder), id-based splits.
//! - [`augment`] — prompt builders for the five augmentation frameworks,
//!   an OpenAI-compatible chat client with a mock transport, and the
//!   generate→validate→regenerate loop.
//! - [`features`] — per-dialogue feature extraction from user utterances,
//!   standard scaling, ANOVA F-test selection and TF-IDF vectorization.
//! - [`detect`] — entropy statistic, logistic and MLP classifiers trained
//!   from scratch, stacking, and a uniform detector interface.
//! - [`eval`] — macro-F1, the offline benchmark protocol, cross-dataset
//!   generalization, and a deterministic synthetic benchmark generator.
//! - [`online`] — progressive (incomplete chat history) evaluation and
//!   prefix-expansion of training corpora.

pub mod augment;
pub mod corpus;
pub mod detect;
pub mod eval;
pub mod features;
pub mod online;
