//! Paired gendered lexicon, tokenization, and gendered-token counting.
//!
//! Every downstream score in the toolkit reduces to the counts produced
//! here: a text is tokenized into lower-case word tokens, each token is
//! mapped through a dictionary lemmatizer (identity fallback), and the
//! lemmas are matched against the male/female term sets of the lexicon.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Bundled default lexicon (male<TAB>female pairs).
pub const BUNDLED_LEXICON: &str = include_str!("../data/lexicon.tsv");
/// Bundled dictionary lemmatizer (form<TAB>lemma).
pub const BUNDLED_LEMMAS: &str = include_str!("../data/lemmas.tsv");
/// Bundled English stopword list.
pub const BUNDLED_STOPWORDS: &str = include_str!("../data/stopwords.txt");

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("lexicon file is empty")]
    Empty,
    #[error("term {term:?} appears in both the male and female lexicon")]
    Overlap { term: String },
    #[error("line {line}: expected two tab-separated columns, got {got:?}")]
    Malformed { line: usize, got: String },
    #[error("lemma dictionary is not idempotent: {form:?} -> {lemma:?} -> {next:?}")]
    NonIdempotent {
        form: String,
        lemma: String,
        next: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// How token matches are counted: every occurrence, or distinct types only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum CountMode {
    /// Count every matching token occurrence (the default reading of
    /// "number of tokens").
    #[default]
    Tokens,
    /// Count each distinct matched term once, regardless of repetition.
    Types,
}

impl fmt::Display for CountMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountMode::Tokens => write!(f, "tokens"),
            CountMode::Types => write!(f, "types"),
        }
    }
}

/// Paired male/female term lists plus derived lookup sets.
#[derive(Debug, Clone)]
pub struct GenderLexicon {
    pairs: Vec<(String, String)>,
    male_set: HashSet<String>,
    female_set: HashSet<String>,
}

impl GenderLexicon {
    /// Parse a lexicon from TSV text: one `male<TAB>female` pair per line,
    /// `#` comments and blank lines ignored. Exact duplicate pairs are
    /// dropped; a term on both sides is an error.
    pub fn from_tsv(text: &str) -> Result<Self, LexiconError> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        let mut seen: HashSet<(String, String)> = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            let (m, f) = match (cols.next(), cols.next(), cols.next()) {
                (Some(m), Some(f), None) => (m.trim().to_lowercase(), f.trim().to_lowercase()),
                _ => {
                    return Err(LexiconError::Malformed {
                        line: idx + 1,
                        got: raw.to_string(),
                    })
                }
            };
            if m.is_empty() || f.is_empty() {
                return Err(LexiconError::Malformed {
                    line: idx + 1,
                    got: raw.to_string(),
                });
            }
            if seen.insert((m.clone(), f.clone())) {
                pairs.push((m, f));
            }
        }
        if pairs.is_empty() {
            return Err(LexiconError::Empty);
        }
        let male_set: HashSet<String> = pairs.iter().map(|(m, _)| m.clone()).collect();
        let female_set: HashSet<String> = pairs.iter().map(|(_, f)| f.clone()).collect();
        if let Some(term) = male_set.intersection(&female_set).next() {
            return Err(LexiconError::Overlap { term: term.clone() });
        }
        Ok(Self {
            pairs,
            male_set,
            female_set,
        })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::from_tsv(&std::fs::read_to_string(path)?)
    }

    /// The lexicon shipped with the crate.
    pub fn bundled() -> Self {
        Self::from_tsv(BUNDLED_LEXICON).expect("bundled lexicon is valid")
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn is_male(&self, lemma: &str) -> bool {
        self.male_set.contains(lemma)
    }

    pub fn is_female(&self, lemma: &str) -> bool {
        self.female_set.contains(lemma)
    }

    /// True when the lemma matches either gender's term set.
    pub fn contains(&self, lemma: &str) -> bool {
        self.is_male(lemma) || self.is_female(lemma)
    }

    /// A lexicon with every pair's columns exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            pairs: self.pairs.iter().map(|(m, f)| (f.clone(), m.clone())).collect(),
            male_set: self.female_set.clone(),
            female_set: self.male_set.clone(),
        }
    }
}

/// Dictionary lemmatizer: inflected form -> lemma, identity fallback.
#[derive(Debug, Clone)]
pub struct Lemmatizer {
    dict: HashMap<String, String>,
}

impl Lemmatizer {
    /// Parse a `form<TAB>lemma` dictionary. Rejects dictionaries where a
    /// mapped lemma is itself re-mapped (lemmatization must be idempotent).
    pub fn from_tsv(text: &str) -> Result<Self, LexiconError> {
        let mut dict: HashMap<String, String> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split('\t');
            match (cols.next(), cols.next(), cols.next()) {
                (Some(form), Some(lemma), None) => {
                    dict.insert(form.trim().to_lowercase(), lemma.trim().to_lowercase());
                }
                _ => {
                    return Err(LexiconError::Malformed {
                        line: idx + 1,
                        got: raw.to_string(),
                    })
                }
            }
        }
        for (form, lemma) in &dict {
            if let Some(next) = dict.get(lemma) {
                if next != lemma {
                    return Err(LexiconError::NonIdempotent {
                        form: form.clone(),
                        lemma: lemma.clone(),
                        next: next.clone(),
                    });
                }
            }
        }
        Ok(Self { dict })
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        Self::from_tsv(&std::fs::read_to_string(path)?)
    }

    /// The dictionary shipped with the crate.
    pub fn bundled() -> Self {
        Self::from_tsv(BUNDLED_LEMMAS).expect("bundled lemma dictionary is valid")
    }

    /// An empty dictionary: every token lemmatizes to itself.
    pub fn identity() -> Self {
        Self { dict: HashMap::new() }
    }

    pub fn lemma<'a>(&'a self, token: &'a str) -> &'a str {
        self.dict.get(token).map(String::as_str).unwrap_or(token)
    }

    /// Tokenize and lemmatize a text into a [`TokenStream`].
    ///
    /// Tokens are maximal runs of alphabetic characters, allowing
    /// apostrophes between letters ("don't" stays one token, em-dashes and
    /// other punctuation split). Everything is lower-cased before lemma
    /// lookup.
    pub fn stream(&self, text: &str) -> TokenStream {
        let tokens = raw_tokens(text)
            .map(|t| self.lemma(&t).to_string())
            .collect();
        TokenStream { tokens }
    }
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Lower-cased alphabetic word tokens with internal apostrophes preserved.
fn raw_tokens(text: &str) -> impl Iterator<Item = String> + '_ {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_alphabetic() {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphabetic()
                    || (is_apostrophe(chars[i])
                        && i + 1 < chars.len()
                        && chars[i + 1].is_alphabetic()
                        && i > start))
            {
                i += 1;
            }
            let token: String = chars[start..i]
                .iter()
                .map(|c| if is_apostrophe(*c) { '\'' } else { *c })
                .collect::<String>()
                .to_lowercase();
            out.push(token);
        } else {
            i += 1;
        }
    }
    out.into_iter()
}

/// Ordered list of lemmatized lower-case tokens.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenStream {
    tokens: Vec<String>,
}

impl TokenStream {
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, String> {
        self.tokens.iter()
    }
}

impl From<Vec<String>> for TokenStream {
    fn from(tokens: Vec<String>) -> Self {
        Self { tokens }
    }
}

/// Male/female match counts for one token stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GenderCounts {
    pub male: u64,
    pub female: u64,
}

impl GenderCounts {
    pub fn total(&self) -> u64 {
        self.male + self.female
    }
}

impl std::ops::Add for GenderCounts {
    type Output = GenderCounts;
    fn add(self, rhs: GenderCounts) -> GenderCounts {
        GenderCounts {
            male: self.male + rhs.male,
            female: self.female + rhs.female,
        }
    }
}

/// Count lexicon matches in a lemmatized stream.
pub fn count_gendered(stream: &TokenStream, lexicon: &GenderLexicon, mode: CountMode) -> GenderCounts {
    match mode {
        CountMode::Tokens => {
            let mut counts = GenderCounts::default();
            for token in stream.iter() {
                if lexicon.is_male(token) {
                    counts.male += 1;
                } else if lexicon.is_female(token) {
                    counts.female += 1;
                }
            }
            counts
        }
        CountMode::Types => {
            let distinct: HashSet<&String> = stream.iter().collect();
            let mut counts = GenderCounts::default();
            for token in distinct {
                if lexicon.is_male(token) {
                    counts.male += 1;
                } else if lexicon.is_female(token) {
                    counts.female += 1;
                }
            }
            counts
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tiny_lexicon() -> GenderLexicon {
        GenderLexicon::from_tsv("he\tshe\nhim\ther\nactor\tactress\n").unwrap()
    }

    #[test]
    fn loads_pairs_and_sets() {
        let lex = GenderLexicon::from_tsv("he\tshe\nactor\tactress\n").unwrap();
        assert_eq!(lex.pair_count(), 2);
        assert!(lex.is_male("he"));
        assert!(lex.is_male("actor"));
        assert!(lex.is_female("actress"));
        assert!(!lex.is_male("actress"));
    }

    #[test]
    fn overlap_is_rejected() {
        let err = GenderLexicon::from_tsv("king\tking\n").unwrap_err();
        assert!(matches!(err, LexiconError::Overlap { term } if term == "king"));
    }

    #[test]
    fn empty_file_is_rejected() {
        assert!(matches!(
            GenderLexicon::from_tsv("# only a comment\n"),
            Err(LexiconError::Empty)
        ));
    }

    #[test]
    fn duplicate_pairs_deduplicated() {
        let lex = GenderLexicon::from_tsv("he\tshe\nhe\tshe\nactor\tactress\n").unwrap();
        assert_eq!(lex.pair_count(), 2);
    }

    #[test]
    fn bundled_lexicon_loads() {
        let lex = GenderLexicon::bundled();
        assert!(lex.pair_count() >= 90, "got {}", lex.pair_count());
        assert!(lex.is_male("king") && lex.is_female("queen"));
    }

    #[test]
    fn lemmatizer_dictionary_fixture() {
        let lem = Lemmatizer::from_tsv("actresses\tactress\nwere\tbe\nheroes\thero\n").unwrap();
        let stream = lem.stream("Actresses were heroes.");
        assert_eq!(stream.tokens(), ["actress", "be", "hero"]);
    }

    #[test]
    fn empty_text_yields_empty_stream() {
        assert!(Lemmatizer::identity().stream("").is_empty());
    }

    #[test]
    fn punctuation_splits_tokens() {
        let stream = Lemmatizer::identity().stream("He\u{2014}he!");
        assert_eq!(stream.tokens(), ["he", "he"]);
    }

    #[test]
    fn internal_apostrophe_kept() {
        let stream = Lemmatizer::identity().stream("don't 'quoted'");
        assert_eq!(stream.tokens(), ["don't", "quoted"]);
    }

    #[test]
    fn non_idempotent_dictionary_rejected() {
        let err = Lemmatizer::from_tsv("geese\tgoose\ngoose\tgander\n").unwrap_err();
        assert!(matches!(err, LexiconError::NonIdempotent { .. }));
    }

    #[test]
    fn bundled_lemmas_are_idempotent() {
        let lem = Lemmatizer::bundled();
        assert_eq!(lem.lemma("actresses"), "actress");
        assert_eq!(lem.lemma("were"), "be");
        assert_eq!(lem.lemma("heroes"), "hero");
    }

    #[test]
    fn counts_with_multiplicity() {
        let lex = tiny_lexicon();
        let stream = TokenStream::from(vec!["he".into(), "her".into(), "actor".into()]);
        let counts = count_gendered(&stream, &lex, CountMode::Tokens);
        assert_eq!(counts, GenderCounts { male: 2, female: 1 });
    }

    #[test]
    fn no_hits_gives_zero() {
        let lex = tiny_lexicon();
        let stream = Lemmatizer::identity().stream("nothing gendered here");
        assert_eq!(
            count_gendered(&stream, &lex, CountMode::Tokens),
            GenderCounts::default()
        );
    }

    #[test]
    fn multiplicity_counts_repeats() {
        let lex = tiny_lexicon();
        let tokens = vec!["she".to_string(); 1000];
        let counts = count_gendered(&TokenStream::from(tokens), &lex, CountMode::Tokens);
        assert_eq!(counts.female, 1000);
    }

    #[test]
    fn type_mode_counts_distinct_terms() {
        let lex = tiny_lexicon();
        let tokens = vec!["she".to_string(), "she".to_string(), "her".to_string()];
        let counts = count_gendered(&TokenStream::from(tokens), &lex, CountMode::Types);
        assert_eq!(counts, GenderCounts { male: 0, female: 2 });
    }

    fn token_vec() -> impl Strategy<Value = Vec<String>> {
        prop::collection::vec(
            prop_oneof![
                Just("he".to_string()),
                Just("she".to_string()),
                Just("him".to_string()),
                Just("her".to_string()),
                Just("actor".to_string()),
                Just("actress".to_string()),
                Just("plot".to_string()),
                Just("story".to_string()),
            ],
            0..50,
        )
    }

    proptest! {
        #[test]
        fn count_is_additive(a in token_vec(), b in token_vec()) {
            let lex = tiny_lexicon();
            let mut joined = a.clone();
            joined.extend(b.clone());
            let ca = count_gendered(&TokenStream::from(a), &lex, CountMode::Tokens);
            let cb = count_gendered(&TokenStream::from(b), &lex, CountMode::Tokens);
            let cj = count_gendered(&TokenStream::from(joined), &lex, CountMode::Tokens);
            prop_assert_eq!(cj, ca + cb);
        }

        #[test]
        fn doubling_doubles_counts(a in token_vec()) {
            let lex = tiny_lexicon();
            let mut doubled = a.clone();
            doubled.extend(a.clone());
            let c1 = count_gendered(&TokenStream::from(a), &lex, CountMode::Tokens);
            let c2 = count_gendered(&TokenStream::from(doubled), &lex, CountMode::Tokens);
            prop_assert_eq!(c2.male, 2 * c1.male);
            prop_assert_eq!(c2.female, 2 * c1.female);
        }

        #[test]
        fn swapping_lexicon_swaps_counts(a in token_vec()) {
            let lex = tiny_lexicon();
            let stream = TokenStream::from(a);
            let c = count_gendered(&stream, &lex, CountMode::Tokens);
            let cs = count_gendered(&stream, &lex.swapped(), CountMode::Tokens);
            prop_assert_eq!(c.male, cs.female);
            prop_assert_eq!(c.female, cs.male);
        }

        #[test]
        fn lemmatization_is_idempotent(text in ".{0,200}") {
            let lem = Lemmatizer::bundled();
            let once = lem.stream(&text);
            let again: Vec<String> = once.iter().map(|t| lem.lemma(t).to_string()).collect();
            prop_assert_eq!(once.tokens(), &again[..]);
        }

        #[test]
        fn tokenizer_never_produces_empty_tokens(text in ".{0,300}") {
            let stream = Lemmatizer::identity().stream(&text);
            prop_assert!(stream.iter().all(|t| !t.is_empty()));
        }
    }
}
