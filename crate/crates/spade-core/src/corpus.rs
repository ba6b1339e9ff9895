//! Dialogue data model, parsing, persistence and structural transforms.
//!
//! A [`Dialogue`] is an ordered list of strictly alternating user/system
//! [`Turn`]s. The first turn is normally a user utterance; a dialogue may
//! instead open with a single system line (a standard opening common to a
//! whole dataset). Values are immutable after construction: every transform
//! returns a new `Dialogue`.
//!
//! Labels describe the *user* side of the conversation — a dialogue whose
//! system utterances were rewritten by an LLM but whose user utterances are
//! the original human ones is still labeled [`LabelKind::Human`]; the
//! synthetic system author is recorded in [`AugmentationRecord`] instead.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Placeholder substituted for system utterances before sentence completion.
pub const MISSING_SENTENCE: &str = "[missing sentence]";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("no role-prefixed line found in dialogue text")]
    NoPrefixedLine,
    #[error("content before the first role prefix: {0:?}")]
    LeadingContent(String),
    #[error("speaker alternation violated at turn indices {0:?}")]
    Alternation(Vec<usize>),
    #[error("dialogue has no user turn")]
    NoUserTurn,
    #[error("k = {k} out of range: dialogue has {available} user utterances")]
    UserPrefixOutOfRange { k: usize, available: usize },
    #[error("split ratio must lie strictly between 0 and 1, got {0}")]
    BadRatio(f64),
    #[error("cannot split an empty id set")]
    EmptyIdSet,
    #[error("duplicate dialogue id {id:?} at line {line}")]
    DuplicateId { id: String, line: usize },
    #[error("malformed corpus line {line}: {source}")]
    MalformedLine {
        line: usize,
        source: serde_json::Error,
    },
    #[error("invalid label: generator must be present iff kind is synthetic")]
    BadLabel,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid source document: {0}")]
    BadSource(String),
}

/// Which side of the conversation produced an utterance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Speaker {
    User,
    System,
}

impl Speaker {
    pub fn as_str(self) -> &'static str {
        match self {
            Speaker::User => "user",
            Speaker::System => "system",
        }
    }

    fn other(self) -> Speaker {
        match self {
            Speaker::User => Speaker::System,
            Speaker::System => Speaker::User,
        }
    }
}

impl fmt::Display for Speaker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One contiguous utterance. Its index is its position in the dialogue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Turn {
    pub speaker: Speaker,
    pub text: String,
}

impl Turn {
    pub fn user(text: impl Into<String>) -> Self {
        Turn {
            speaker: Speaker::User,
            text: text.into(),
        }
    }

    pub fn system(text: impl Into<String>) -> Self {
        Turn {
            speaker: Speaker::System,
            text: text.into(),
        }
    }
}

/// Class of the dialogue's user side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Human,
    Synthetic,
}

/// Origin of the user utterances, collapsible to binary Human/AI and
/// expandable to one class per generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OriginLabel {
    pub kind: LabelKind,
    pub generator: Option<String>,
}

impl OriginLabel {
    pub fn human() -> Self {
        OriginLabel {
            kind: LabelKind::Human,
            generator: None,
        }
    }

    pub fn synthetic(generator: impl Into<String>) -> Self {
        OriginLabel {
            kind: LabelKind::Synthetic,
            generator: Some(generator.into()),
        }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        let ok = match self.kind {
            LabelKind::Human => self.generator.is_none(),
            LabelKind::Synthetic => self.generator.is_some(),
        };
        if ok {
            Ok(())
        } else {
            Err(CorpusError::BadLabel)
        }
    }

    /// Binary class name: "Human" or "AI".
    pub fn binary_class(&self) -> &'static str {
        match self.kind {
            LabelKind::Human => "Human",
            LabelKind::Synthetic => "AI",
        }
    }

    /// Multiclass name: "Human" or the generator id.
    pub fn multiclass(&self) -> String {
        match (&self.kind, &self.generator) {
            (LabelKind::Human, _) => "Human".to_string(),
            (LabelKind::Synthetic, Some(g)) => g.clone(),
            (LabelKind::Synthetic, None) => "AI".to_string(),
        }
    }
}

/// The augmentation framework that produced a dialogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Framework {
    /// Missing sentence completion: system utterances regenerated in place.
    Ms,
    /// Next response generation: one user reply from cropped history.
    Nr,
    /// Paraphrase stage 1: system utterances replaced, user kept.
    Par1,
    /// Paraphrase stage 2: user utterances rephrased on top of stage 1.
    Par2,
    /// Goal-to-dialogue: full dialogue generated from a user goal.
    G2d,
    /// End-to-end conversation between two LLM roles.
    E2e,
}

impl Framework {
    pub fn as_str(self) -> &'static str {
        match self {
            Framework::Ms => "ms",
            Framework::Nr => "nr",
            Framework::Par1 => "par1",
            Framework::Par2 => "par2",
            Framework::G2d => "g2d",
            Framework::E2e => "e2e",
        }
    }
}

/// How an LLM-produced dialogue came to be.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationRecord {
    pub framework: Framework,
    pub generator_ids: Vec<String>,
    /// Generation attempts consumed before validation passed (≥ 1).
    pub rounds: u32,
    pub parent_id: Option<String>,
}

/// An alternating user/system conversation with label and provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dialogue {
    pub id: String,
    pub goal: Option<String>,
    pub label: OriginLabel,
    pub provenance: Option<AugmentationRecord>,
    pub turns: Vec<Turn>,
}

impl Dialogue {
    /// Builds a dialogue, enforcing alternation and label consistency.
    pub fn new(
        id: impl Into<String>,
        goal: Option<String>,
        turns: Vec<Turn>,
        label: OriginLabel,
        provenance: Option<AugmentationRecord>,
    ) -> Result<Self, CorpusError> {
        label.validate()?;
        let d = Dialogue {
            id: id.into(),
            goal,
            label,
            provenance,
            turns,
        };
        d.validate_structure()?;
        Ok(d)
    }

    /// Checks strict speaker alternation. The opening turn may be either a
    /// user utterance or a standard system opening line.
    pub fn validate_structure(&self) -> Result<(), CorpusError> {
        let bad: Vec<usize> = self
            .turns
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1].speaker != w[0].speaker.other())
            .map(|(i, _)| i + 1)
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(CorpusError::Alternation(bad))
        }
    }

    /// Number of user utterances, `U(d)`.
    pub fn user_turn_count(&self) -> usize {
        self.turns
            .iter()
            .filter(|t| t.speaker == Speaker::User)
            .count()
    }

    pub fn user_texts(&self) -> Vec<&str> {
        self.turns
            .iter()
            .filter(|t| t.speaker == Speaker::User)
            .map(|t| t.text.as_str())
            .collect()
    }

    /// All user utterances joined by a single space.
    pub fn user_text(&self) -> String {
        self.user_texts().join(" ")
    }
}

/// A named, ordered collection of dialogues with unique ids.
#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub name: String,
    pub dialogues: Vec<Dialogue>,
    pub metadata: BTreeMap<String, String>,
}

impl Corpus {
    pub fn new(name: impl Into<String>, dialogues: Vec<Dialogue>) -> Self {
        Corpus {
            name: name.into(),
            dialogues,
            metadata: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.dialogues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dialogues.is_empty()
    }

    pub fn ids(&self) -> BTreeSet<String> {
        self.dialogues.iter().map(|d| d.id.clone()).collect()
    }
}

fn strip_role_prefix(line: &str) -> Option<(Speaker, &str)> {
    let trimmed = line.trim_start();
    for (prefix, speaker) in [("user:", Speaker::User), ("system:", Speaker::System)] {
        if trimmed.len() >= prefix.len() && trimmed[..prefix.len()].eq_ignore_ascii_case(prefix) {
            return Some((speaker, trimmed[prefix.len()..].trim()));
        }
    }
    None
}

/// Parses plain-text dialogue lines of the form `user: ...` / `system: ...`.
///
/// Role prefixes match case-insensitively. Lines without a prefix continue
/// the preceding utterance (LLM output often wraps); non-empty content before
/// the first prefixed line is an error. Alternation is checked after parsing.
pub fn parse_dialogue(text: &str, id: &str) -> Result<Dialogue, CorpusError> {
    let mut turns: Vec<Turn> = Vec::new();
    for raw_line in text.lines() {
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        match strip_role_prefix(line) {
            Some((speaker, content)) => turns.push(Turn {
                speaker,
                text: content.to_string(),
            }),
            None => match turns.last_mut() {
                Some(turn) => {
                    if !turn.text.is_empty() {
                        turn.text.push(' ');
                    }
                    turn.text.push_str(line);
                }
                None => return Err(CorpusError::LeadingContent(line.to_string())),
            },
        }
    }
    if turns.is_empty() {
        return Err(CorpusError::NoPrefixedLine);
    }
    Dialogue::new(id, None, turns, OriginLabel::human(), None)
}

/// Renders a dialogue back to `user: ...` / `system: ...` lines, the inverse
/// of [`parse_dialogue`] for well-formed dialogues.
pub fn render_dialogue(d: &Dialogue) -> String {
    d.turns
        .iter()
        .map(|t| format!("{}: {}", t.speaker, t.text))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Keeps the prefix of `d` up to and including the k-th user utterance.
///
/// Goal, label and provenance are preserved. Callers exclude dialogues with
/// fewer than `k` user utterances; those yield an out-of-range error here.
pub fn crop_user_prefix(d: &Dialogue, k: usize) -> Result<Dialogue, CorpusError> {
    let available = d.user_turn_count();
    if k == 0 || k > available {
        return Err(CorpusError::UserPrefixOutOfRange { k, available });
    }
    let mut seen = 0usize;
    let mut end = 0usize;
    for (i, t) in d.turns.iter().enumerate() {
        if t.speaker == Speaker::User {
            seen += 1;
            if seen == k {
                end = i + 1;
                break;
            }
        }
    }
    let mut out = d.clone();
    out.turns.truncate(end);
    Ok(out)
}

/// Replaces the last user utterance with the empty string.
pub fn blank_last_user(d: &Dialogue) -> Result<Dialogue, CorpusError> {
    let last_user = d
        .turns
        .iter()
        .rposition(|t| t.speaker == Speaker::User)
        .ok_or(CorpusError::NoUserTurn)?;
    let mut out = d.clone();
    out.turns[last_user].text = String::new();
    Ok(out)
}

/// Replaces every system utterance with the `[missing sentence]` placeholder,
/// leaving user turns byte-identical.
pub fn replace_system_with_placeholder(d: &Dialogue) -> Dialogue {
    let mut out = d.clone();
    for t in &mut out.turns {
        if t.speaker == Speaker::System {
            t.text = MISSING_SENTENCE.to_string();
        }
    }
    out
}

/// Splits an id set into train/test with `floor(ratio * n)` train ids.
///
/// Deterministic for a given seed; an id never lands on both sides.
pub fn split_ids(
    ids: &BTreeSet<String>,
    ratio: f64,
    seed: u64,
) -> Result<(Vec<String>, Vec<String>), CorpusError> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(CorpusError::BadRatio(ratio));
    }
    if ids.is_empty() {
        return Err(CorpusError::EmptyIdSet);
    }
    let mut ordered: Vec<String> = ids.iter().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ordered.shuffle(&mut rng);
    let n_train = (ratio * ordered.len() as f64).floor() as usize;
    let test = ordered.split_off(n_train);
    Ok((ordered, test))
}

/// Splits the union of dialogue ids across `corpora` by [`split_ids`].
/// Positive and negative samples sharing an id follow that id's side.
pub fn split_by_id(
    corpora: &[&Corpus],
    ratio: f64,
    seed: u64,
) -> Result<(Vec<String>, Vec<String>), CorpusError> {
    let mut ids = BTreeSet::new();
    for c in corpora {
        ids.extend(c.dialogues.iter().map(|d| d.id.clone()));
    }
    split_ids(&ids, ratio, seed)
}

/// JSONL persistence: one dialogue object per line, fields in canonical
/// order (`id`, `goal`, `label`, `provenance`, `turns`), so save→load→save
/// is byte-identical.
pub fn save_corpus(corpus: &Corpus, path: impl AsRef<Path>) -> Result<(), CorpusError> {
    let file = File::create(path)?;
    let mut w = BufWriter::new(file);
    for d in &corpus.dialogues {
        let line = serde_json::to_string(d).expect("dialogue serialization is infallible");
        w.write_all(line.as_bytes())?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus, CorpusError> {
    let path = path.as_ref();
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "corpus".to_string());
    let file = File::open(path)?;
    let reader = BufReader::new(file);
    let mut dialogues = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let d: Dialogue =
            serde_json::from_str(&line).map_err(|source| CorpusError::MalformedLine {
                line: i + 1,
                source,
            })?;
        d.label.validate()?;
        if !seen.insert(d.id.clone()) {
            return Err(CorpusError::DuplicateId {
                id: d.id,
                line: i + 1,
            });
        }
        dialogues.push(d);
    }
    Ok(Corpus::new(name, dialogues))
}

/// Outcome of importing a source document: the corpus plus how many records
/// were skipped as malformed.
#[derive(Debug)]
pub struct ImportReport {
    pub corpus: Corpus,
    pub skipped: usize,
}

fn html_tags() -> &'static regex::Regex {
    use std::sync::OnceLock;
    static RE: OnceLock<regex::Regex> = OnceLock::new();
    RE.get_or_init(|| regex::Regex::new("<[^>]*>").unwrap())
}

fn goal_text(value: &serde_json::Value) -> Option<String> {
    let joined = match value {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Object(map) => match map.get("message") {
            Some(serde_json::Value::String(s)) => s.clone(),
            Some(serde_json::Value::Array(items)) => items
                .iter()
                .filter_map(|v| v.as_str())
                .collect::<Vec<_>>()
                .join(" "),
            _ => return None,
        },
        _ => return None,
    };
    let cleaned = html_tags().replace_all(&joined, "").trim().to_string();
    if cleaned.is_empty() {
        None
    } else {
        Some(cleaned)
    }
}

/// Imports a MultiWOZ-style JSON document: a top-level object mapping
/// dialogue ids to records with a `log` of utterances (user and system
/// alternating, user first) and optional goal text. Records without a
/// usable log are skipped and counted.
pub fn import_multiwoz(path: impl AsRef<Path>) -> Result<ImportReport, CorpusError> {
    let raw = std::fs::read_to_string(path)?;
    let doc: serde_json::Value =
        serde_json::from_str(&raw).map_err(|e| CorpusError::BadSource(e.to_string()))?;
    let map = doc
        .as_object()
        .ok_or_else(|| CorpusError::BadSource("expected a top-level JSON object".into()))?;

    let mut dialogues = Vec::new();
    let mut skipped = 0usize;
    for (id, record) in map {
        let Some(log) = record.get("log").and_then(|l| l.as_array()) else {
            skipped += 1;
            continue;
        };
        let mut turns = Vec::with_capacity(log.len());
        let mut ok = true;
        for (i, entry) in log.iter().enumerate() {
            let Some(text) = entry.get("text").and_then(|t| t.as_str()) else {
                ok = false;
                break;
            };
            let speaker = if i % 2 == 0 {
                Speaker::User
            } else {
                Speaker::System
            };
            turns.push(Turn {
                speaker,
                text: text.trim().to_string(),
            });
        }
        if !ok || turns.is_empty() {
            skipped += 1;
            continue;
        }
        let goal = record.get("goal").and_then(goal_text);
        match Dialogue::new(id.clone(), goal, turns, OriginLabel::human(), None) {
            Ok(d) => dialogues.push(d),
            Err(_) => skipped += 1,
        }
    }
    Ok(ImportReport {
        corpus: Corpus::new("multiwoz", dialogues),
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dlg(turns: Vec<Turn>) -> Dialogue {
        Dialogue::new("d1", None, turns, OriginLabel::human(), None).unwrap()
    }

    #[test]
    fn parse_four_turn_dialogue() {
        let text = "user: am looking for a place to to stay...\n\
                    system: Okay, do you have a specific area...\n\
                    user: no, i just need...\n\
                    system: I found 1 cheap hotel...";
        let d = parse_dialogue(text, "mul0001").unwrap();
        assert_eq!(d.turns.len(), 4);
        let speakers: Vec<Speaker> = d.turns.iter().map(|t| t.speaker).collect();
        assert_eq!(
            speakers,
            vec![
                Speaker::User,
                Speaker::System,
                Speaker::User,
                Speaker::System
            ]
        );
        assert_eq!(d.turns[0].text, "am looking for a place to to stay...");
    }

    #[test]
    fn parse_minimal_dialogue() {
        let d = parse_dialogue("user: hi", "x").unwrap();
        assert_eq!(d.turns.len(), 1);
        assert_eq!(d.turns[0].text, "hi");
    }

    #[test]
    fn parse_system_opening_allowed() {
        let d = parse_dialogue("system: Welcome!\nuser: hi", "x").unwrap();
        assert_eq!(d.turns.len(), 2);
        assert_eq!(d.turns[0].speaker, Speaker::System);
    }

    #[test]
    fn parse_continuation_lines_join_previous_utterance() {
        let d = parse_dialogue("user: hello\nthere\nsystem: hi", "x").unwrap();
        assert_eq!(d.turns[0].text, "hello there");
    }

    #[test]
    fn parse_case_insensitive_prefix() {
        let d = parse_dialogue("user: a\nSystem: [missing sentence]", "x").unwrap();
        assert_eq!(d.turns[1].speaker, Speaker::System);
        assert_eq!(d.turns[1].text, MISSING_SENTENCE);
    }

    #[test]
    fn parse_rejects_unprefixed_text() {
        assert!(matches!(
            parse_dialogue("hello there", "x"),
            Err(CorpusError::NoPrefixedLine) | Err(CorpusError::LeadingContent(_))
        ));
    }

    #[test]
    fn parse_rejects_alternation_violation() {
        let err = parse_dialogue("user: a\nuser: b\nuser: c", "x").unwrap_err();
        match err {
            CorpusError::Alternation(idx) => assert_eq!(idx, vec![1, 2]),
            other => panic!("expected alternation error, got {other:?}"),
        }
    }

    #[test]
    fn crop_keeps_prefix_through_kth_user_turn() {
        let d = dlg(vec![
            Turn::user("u1"),
            Turn::system("s1"),
            Turn::user("u2"),
            Turn::system("s2"),
        ]);
        let c = crop_user_prefix(&d, 2).unwrap();
        assert_eq!(c.turns.len(), 3);
        assert_eq!(c.turns[2].text, "u2");
    }

    #[test]
    fn crop_identity_when_dialogue_ends_with_kth_user() {
        let d = dlg(vec![Turn::user("u1"), Turn::system("s1"), Turn::user("u2")]);
        let c = crop_user_prefix(&d, 2).unwrap();
        assert_eq!(c.turns, d.turns);
    }

    #[test]
    fn crop_to_single_user_turn() {
        let d = dlg(vec![
            Turn::user("u1"),
            Turn::system("s1"),
            Turn::user("u2"),
            Turn::system("s2"),
            Turn::user("u3"),
            Turn::system("s3"),
        ]);
        let c = crop_user_prefix(&d, 1).unwrap();
        assert_eq!(c.turns.len(), 1);
    }

    #[test]
    fn crop_out_of_range() {
        let d = dlg(vec![Turn::user("u1")]);
        assert!(matches!(
            crop_user_prefix(&d, 2),
            Err(CorpusError::UserPrefixOutOfRange { k: 2, available: 1 })
        ));
    }

    #[test]
    fn blank_last_user_clears_only_last_user() {
        let d = dlg(vec![Turn::user("hi"), Turn::system("hello"), Turn::user("bye")]);
        let b = blank_last_user(&d).unwrap();
        assert_eq!(b.turns[0].text, "hi");
        assert_eq!(b.turns[1].text, "hello");
        assert_eq!(b.turns[2].text, "");
        // idempotent
        assert_eq!(blank_last_user(&b).unwrap(), b);
    }

    #[test]
    fn blank_last_user_single_turn() {
        let d = dlg(vec![Turn::user("hi")]);
        assert_eq!(blank_last_user(&d).unwrap().turns[0].text, "");
    }

    #[test]
    fn placeholder_replaces_all_system_turns() {
        let d = dlg(vec![
            Turn::user("u1"),
            Turn::system("s1"),
            Turn::user("u2"),
            Turn::system("s2"),
        ]);
        let p = replace_system_with_placeholder(&d);
        assert_eq!(p.turns[1].text, MISSING_SENTENCE);
        assert_eq!(p.turns[3].text, MISSING_SENTENCE);
        assert_eq!(p.turns[0].text, "u1");
        assert_eq!(p.turns[2].text, "u2");
    }

    #[test]
    fn placeholder_noop_without_system_turns() {
        let d = dlg(vec![Turn::user("u1")]);
        assert_eq!(replace_system_with_placeholder(&d), d);
    }

    #[test]
    fn split_616_ids_ratio_08() {
        let ids: BTreeSet<String> = (0..616).map(|i| format!("id{i:03}")).collect();
        let (train, test) = split_ids(&ids, 0.8, 1).unwrap();
        assert_eq!(train.len(), 492);
        assert_eq!(test.len(), 124);
    }

    #[test]
    fn split_deterministic_and_partitioning() {
        let ids: BTreeSet<String> = (0..20).map(|i| format!("d{i}")).collect();
        let a = split_ids(&ids, 0.8, 7).unwrap();
        let b = split_ids(&ids, 0.8, 7).unwrap();
        assert_eq!(a, b);
        let mut union: BTreeSet<String> = a.0.iter().cloned().collect();
        union.extend(a.1.iter().cloned());
        assert_eq!(union, ids);
        let train: BTreeSet<_> = a.0.iter().collect();
        assert!(a.1.iter().all(|id| !train.contains(id)));
    }

    #[test]
    fn split_two_ids_half() {
        let ids: BTreeSet<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let (train, test) = split_ids(&ids, 0.5, 0).unwrap();
        assert_eq!((train.len(), test.len()), (1, 1));
    }

    #[test]
    fn split_rejects_empty_and_bad_ratio() {
        let ids: BTreeSet<String> = BTreeSet::new();
        assert!(matches!(
            split_ids(&ids, 0.5, 0),
            Err(CorpusError::EmptyIdSet)
        ));
        let ids: BTreeSet<String> = ["a".to_string()].into_iter().collect();
        assert!(matches!(
            split_ids(&ids, 1.0, 0),
            Err(CorpusError::BadRatio(_))
        ));
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let mut dialogues = Vec::new();
        for i in 0..3 {
            let mut d = dlg(vec![Turn::user("hi"), Turn::system("hello")]);
            d.id = format!("d{i}");
            d.goal = Some("find a hotel".into());
            dialogues.push(d);
        }
        dialogues[2].label = OriginLabel::synthetic("gpt-3.5");
        dialogues[2].provenance = Some(AugmentationRecord {
            framework: Framework::G2d,
            generator_ids: vec!["gpt-3.5".into()],
            rounds: 2,
            parent_id: Some("d0".into()),
        });
        let corpus = Corpus::new("c", dialogues);
        save_corpus(&corpus, &path).unwrap();
        let loaded = load_corpus(&path).unwrap();
        assert_eq!(loaded.dialogues, corpus.dialogues);
        // byte-identical second save
        let path2 = dir.path().join("c2.jsonl");
        save_corpus(&loaded, &path2).unwrap();
        assert_eq!(
            std::fs::read(&path).unwrap(),
            std::fs::read(&path2).unwrap()
        );
    }

    #[test]
    fn load_reports_line_of_malformed_record() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        std::fs::write(&path, "{\"goal\": null}\n").unwrap();
        match load_corpus(&path) {
            Err(CorpusError::MalformedLine { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected malformed line error, got {other:?}"),
        }
    }

    #[test]
    fn load_empty_file_is_empty_corpus() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.jsonl");
        std::fs::write(&path, "").unwrap();
        assert!(load_corpus(&path).unwrap().is_empty());
    }

    #[test]
    fn load_rejects_duplicate_ids() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dup.jsonl");
        let d = dlg(vec![Turn::user("hi")]);
        let line = serde_json::to_string(&d).unwrap();
        std::fs::write(&path, format!("{line}\n{line}\n")).unwrap();
        assert!(matches!(
            load_corpus(&path),
            Err(CorpusError::DuplicateId { .. })
        ));
    }

    #[test]
    fn import_multiwoz_maps_goal_and_labels() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mw.json");
        let doc = serde_json::json!({
            "d1.json": {
                "goal": {"message": ["find a <span>cheap</span> hotel"]},
                "log": [{"text": "hi"}, {"text": "hello"}]
            },
            "d2.json": {
                "goal": "book a room",
                "log": [{"text": "need a room"}]
            },
            "d3.json": { "goal": "broken" }
        });
        std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
        let report = import_multiwoz(&path).unwrap();
        assert_eq!(report.corpus.len(), 2);
        assert_eq!(report.skipped, 1);
        let d1 = &report.corpus.dialogues[0];
        assert_eq!(d1.goal.as_deref(), Some("find a cheap hotel"));
        assert_eq!(d1.label, OriginLabel::human());
        assert_eq!(d1.turns[1].speaker, Speaker::System);
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(texts in proptest::collection::vec("[a-z][a-z ,.!?']{0,40}", 1..8)) {
            let turns: Vec<Turn> = texts
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let text = t.trim().to_string();
                    let text = if text.is_empty() { "x".to_string() } else { text };
                    if i % 2 == 0 { Turn::user(text) } else { Turn::system(text) }
                })
                .collect();
            let d = Dialogue::new("p", None, turns, OriginLabel::human(), None).unwrap();
            let parsed = parse_dialogue(&render_dialogue(&d), "p").unwrap();
            prop_assert_eq!(parsed.turns, d.turns);
        }

        #[test]
        fn crop_user_sequence_is_prefix(k in 1usize..4, n in 4usize..10) {
            let turns: Vec<Turn> = (0..n)
                .map(|i| if i % 2 == 0 { Turn::user(format!("u{i}")) } else { Turn::system(format!("s{i}")) })
                .collect();
            let d = Dialogue::new("p", None, turns, OriginLabel::human(), None).unwrap();
            prop_assume!(k <= d.user_turn_count());
            let c = crop_user_prefix(&d, k).unwrap();
            let expected: Vec<&str> = d.user_texts().into_iter().take(k).collect();
            prop_assert_eq!(c.user_texts(), expected);
            prop_assert_eq!(c.user_turn_count(), k);
        }

        #[test]
        fn placeholder_never_touches_user_bytes(n in 1usize..9) {
            let turns: Vec<Turn> = (0..n)
                .map(|i| if i % 2 == 0 { Turn::user(format!("téxt {i} !!")) } else { Turn::system(format!("s{i}")) })
                .collect();
            let d = Dialogue::new("p", None, turns, OriginLabel::human(), None).unwrap();
            let p = replace_system_with_placeholder(&d);
            prop_assert_eq!(p.user_texts(), d.user_texts());
        }
    }
}
