//! Bundled word lists with pinned contents.
//!
//! These are deliberately small: the goal is deterministic, dependency-free
//! feature extraction, not linguistic coverage. Lists are lowercase and
//! matched against lowercase word tokens.

use std::collections::HashSet;
use std::sync::OnceLock;

pub const STOPWORDS: &[&str] = &[
    "a", "about", "after", "again", "all", "also", "an", "and", "any", "are", "as", "at", "be",
    "because", "been", "before", "being", "but", "by", "can", "could", "did", "do", "does", "for",
    "from", "had", "has", "have", "he", "her", "here", "him", "his", "how", "i", "if", "in", "into",
    "is", "it", "its", "just", "me", "my", "no", "not", "of", "on", "or", "our", "out", "she",
    "should", "so", "some", "than", "that", "the", "their", "them", "then", "there", "these",
    "they", "this", "those", "to", "up", "was", "we", "were", "what", "when", "where", "which",
    "who", "will", "with", "would", "you", "your",
];

pub const FUNCTION_WORDS: &[&str] = &[
    "a", "am", "an", "and", "any", "are", "at", "be", "been", "but", "by", "can", "could", "did",
    "do", "does", "each", "every", "for", "from", "had", "has", "have", "he", "her", "him", "his",
    "i", "in", "into", "is", "it", "its", "may", "might", "must", "my", "nor", "of", "on", "or",
    "our", "over", "shall", "she", "should", "so", "some", "that", "the", "their", "them", "these",
    "they", "this", "those", "to", "under", "us", "was", "we", "were", "will", "with", "would",
    "yet", "you", "your",
];

pub const DISCOURSE_MARKERS: &[&str] = &[
    "actually", "alright", "also", "although", "anyway", "basically", "besides", "finally",
    "first", "furthermore", "great", "hmm", "honestly", "however", "meanwhile", "moreover", "nah",
    "now", "oh", "ok", "okay", "perfect", "please", "right", "second", "so", "sorry", "sure",
    "thank", "thanks", "then", "though", "well", "yeah", "yep", "yes",
];

pub const POSITIVE_WORDS: &[&str] = &[
    "affordable", "amazing", "appreciate", "awesome", "best", "better", "brilliant", "cheap",
    "clean", "comfortable", "convenient", "cool", "delighted", "enjoy", "enjoyed", "excellent",
    "fantastic", "fine", "friendly", "glad", "good", "great", "happy", "helpful", "ideal", "like",
    "liked", "love", "lovely", "loved", "marvelous", "neat", "nice", "perfect", "pleasant",
    "pleased", "recommend", "satisfied", "splendid", "superb", "sweet", "thank", "thanks",
    "wonderful", "yes",
];

pub const NEGATIVE_WORDS: &[&str] = &[
    "angry", "annoyed", "annoying", "awful", "bad", "broken", "cancel", "cancelled", "complaint",
    "costly", "dirty", "disappointed", "disappointing", "expensive", "fail", "failed", "failure",
    "frustrated", "frustrating", "horrible", "issue", "issues", "late", "never", "no", "noisy",
    "not", "poor", "problem", "problems", "refuse", "refused", "rude", "sad", "slow", "sorry",
    "terrible", "unavailable", "uncomfortable", "unfortunately", "unhappy", "unhelpful", "worse",
    "worst", "wrong",
];

pub const FIRST_PERSON: &[&str] = &["i", "me", "mine", "my", "our", "ours", "us", "we"];

/// Common-English plus hotel-domain vocabulary used for the dictionary-miss
/// rate. Word tokens absent from this list (and not purely numeric) count as
/// misses.
pub const DICTIONARY_EXTRA: &[&str] = &[
    // everyday verbs and forms
    "accept", "add", "agree", "allow", "answer", "arrive", "ask", "asked", "asking",
    "assist", "be", "begin", "book", "booked", "booking", "bring", "call", "called", "change",
    "changed", "check", "checked", "choose", "come", "confirm", "confirmed", "consider", "contact",
    "cost", "costs", "depart", "end", "ended", "expect", "find", "finding", "found", "get",
    "getting", "give", "given", "go", "going", "got", "guarantee", "happen", "hear", "help",
    "helped", "helping", "hold", "hope", "include", "included", "includes", "including", "know",
    "leave", "let", "live", "look", "looked", "looking", "make", "making", "manage", "mean",
    "meet", "move", "need", "needed", "needs", "offer", "offered", "offers", "pay", "place",
    "placed", "plan", "prefer", "provide", "provided", "provides", "put", "read", "receive",
    "recommended", "require", "required", "reserve", "reserved", "respond", "return", "say",
    "said", "search", "see", "seem", "seems", "send", "sent", "set", "show", "showed", "speak",
    "start", "started", "stay", "staying", "stop", "suggest", "suggested", "take", "talk", "tell",
    "think", "told", "try", "trying", "understand", "use", "using", "visit", "wait", "want",
    "wanted", "wants", "wish", "work", "works",
    // everyday nouns
    "address", "adult", "adults", "afternoon", "agent", "airport", "apartment", "area", "arrival",
    "assistance", "attraction", "attractions", "bank", "bar", "bathroom", "bed", "beds",
    "breakfast", "budget", "building", "bus", "car", "card", "care", "center", "centre", "chat",
    "children", "choice", "choices", "city", "code", "conversation", "criteria", "customer",
    "date", "day", "days", "deal", "departure", "deposit", "desk", "detail", "details",
    "dinner", "direction", "directions", "distance", "door", "east", "email", "evening", "event",
    "family", "fee", "floor", "food", "form", "garden", "group", "guest", "guesthouse", "guests",
    "guys", "history", "home", "hotel", "hotels", "hour", "hours", "house", "info", "information",
    "internet", "kind", "kinds", "list", "location", "lot", "luck", "lunch", "member", "message",
    "minute", "minutes", "moment", "money", "month", "morning", "name", "night", "nights", "north",
    "number", "option", "options", "order", "others", "parking", "part", "party", "people",
    "person", "phone", "place", "places", "point", "pool", "postcode", "price", "prices", "query",
    "question", "questions", "range", "rate", "rates", "rating", "reference", "request",
    "requirement", "requirements", "reservation", "restaurant", "result", "results", "review",
    "reviews", "room", "rooms", "service", "services", "side", "site", "south", "spot", "star",
    "stars", "station", "stay", "street", "system", "thing", "things", "time", "times", "today",
    "tomorrow", "town", "train", "trip", "type", "types", "user", "view", "way", "week", "weekend",
    "west", "wifi", "woman", "word", "year", "years",
    // adjectives and adverbs
    "able", "again", "ahead", "anything", "anywhere", "available", "away", "back", "big", "both",
    "budget", "busy", "certain", "certainly", "close", "correct", "definitely", "different",
    "directly", "double", "down", "early", "either", "else", "enough", "even", "exact", "exactly",
    "expensive", "extra", "far", "fast", "few", "free", "full", "further", "high", "higher",
    "instead", "large", "last", "later", "less", "little", "local", "long", "longer", "low",
    "lower", "luxurious", "main", "many", "maybe", "middle", "moderate", "moderately", "more",
    "most", "much", "near", "nearby", "new", "next", "nothing", "off", "often", "once", "one",
    "only", "open", "other", "own", "particular", "per", "possible", "pretty", "priced", "quick",
    "quite", "ready", "really", "same", "several", "single", "small", "soon", "specific", "still",
    "such", "suitable", "too", "total", "twin", "unable", "various", "very", "welcome", "whole",
    "within", "yet",
    // pronouns, question words, misc
    "am", "anyone", "anybody", "cannot", "dont", "down", "each", "either", "else", "everyone",
    "everything", "hello", "hey", "hi", "im", "it", "itself", "ill", "ive", "let", "lets",
    "might", "must", "myself", "neither", "none", "nope", "nor", "nothing", "o", "ones", "onto",
    "ought", "s", "shall", "something", "somewhere", "t", "till", "until", "upon", "us", "while",
    "whether", "why", "without", "wont", "wouldnt", "y", "youre",
    // days and numbers
    "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday", "january",
    "february", "march", "april", "may", "june", "july", "august", "september", "october",
    "november", "december", "zero", "one", "two", "three", "four", "five", "six", "seven",
    "eight", "nine", "ten", "eleven", "twelve", "first", "second", "third", "fourth", "fifth",
    "half", "couple", "dozen", "hundred",
];

fn build_set(lists: &[&[&str]]) -> HashSet<&'static str> {
    let mut set = HashSet::new();
    for list in lists {
        set.extend(list.iter().copied());
    }
    set
}

pub fn dictionary() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| {
        build_set(&[
            STOPWORDS,
            FUNCTION_WORDS,
            DISCOURSE_MARKERS,
            POSITIVE_WORDS,
            NEGATIVE_WORDS,
            FIRST_PERSON,
            DICTIONARY_EXTRA,
        ])
    })
}

pub fn stopwords() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| build_set(&[STOPWORDS]))
}

pub fn function_words() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| build_set(&[FUNCTION_WORDS]))
}

pub fn discourse_markers() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| build_set(&[DISCOURSE_MARKERS]))
}

pub fn positive_words() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| build_set(&[POSITIVE_WORDS]))
}

pub fn negative_words() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| build_set(&[NEGATIVE_WORDS]))
}

pub fn first_person() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| build_set(&[FIRST_PERSON]))
}
