//! Deterministic text utilities shared by feature extraction and detection.
//!
//! Word tokens are maximal runs of alphanumeric characters, Unicode-lowercased;
//! punctuation splits tokens and is surfaced separately for punctuation
//! features. Syllables come from a vowel-group heuristic with a silent-e rule,
//! which keeps readability scores reproducible without external dictionaries.

/// Lowercased alphanumeric word tokens.
pub fn word_tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if ch.is_alphanumeric() {
            cur.extend(ch.to_lowercase());
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Maximal runs of punctuation (non-alphanumeric, non-whitespace) characters.
pub fn punct_runs(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        if !ch.is_alphanumeric() && !ch.is_whitespace() {
            cur.push(ch);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// Sentence count: segments ended by `.`, `!` or `?`; a trailing unterminated
/// segment containing a word counts as one sentence.
pub fn sentence_count(text: &str) -> usize {
    let mut count = 0usize;
    let mut has_word = false;
    let mut prev_terminator = false;
    for ch in text.chars() {
        let terminator = matches!(ch, '.' | '!' | '?');
        if terminator {
            if has_word && !prev_terminator {
                count += 1;
                has_word = false;
            }
        } else if ch.is_alphanumeric() {
            has_word = true;
        }
        prev_terminator = terminator;
    }
    if has_word {
        count += 1;
    }
    count
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y')
}

/// Syllables in a single lowercase word: vowel groups, minus a trailing
/// silent `e` (unless the word ends in `le`), never below 1.
pub fn syllables(word: &str) -> usize {
    let chars: Vec<char> = word
        .chars()
        .flat_map(|c| c.to_lowercase())
        .filter(|c| c.is_alphabetic())
        .collect();
    if chars.is_empty() {
        return 0;
    }
    let mut groups = 0usize;
    let mut in_group = false;
    for &c in &chars {
        if is_vowel(c) {
            if !in_group {
                groups += 1;
                in_group = true;
            }
        } else {
            in_group = false;
        }
    }
    let n = chars.len();
    let silent_e = n >= 2
        && chars[n - 1] == 'e'
        && !(n >= 2 && chars[n - 2] == 'l')
        && groups > 1;
    if silent_e {
        groups -= 1;
    }
    groups.max(1)
}

/// Contractions: apostrophe joining two alphabetic characters ("don't").
pub fn contraction_count(text: &str) -> usize {
    let chars: Vec<char> = text.chars().collect();
    chars
        .windows(3)
        .filter(|w| w[0].is_alphabetic() && (w[1] == '\'' || w[1] == '’') && w[2].is_alphabetic())
        .count()
}
