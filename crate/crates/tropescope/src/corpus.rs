//! Core corpus records: tropes, works, and example occurrences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// The media supported by the dataset. Everything else is dropped at
/// ingest time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MediaType {
    Film,
    Tv,
    Literature,
}

impl MediaType {
    pub const ALL: [MediaType; 3] = [MediaType::Film, MediaType::Tv, MediaType::Literature];

    /// Parse a media-section label; unsupported media yield `None`.
    pub fn parse(label: &str) -> Option<MediaType> {
        match label.trim().to_lowercase().as_str() {
            "film" | "movie" | "movies" => Some(MediaType::Film),
            "tv" | "television" | "live-action tv" => Some(MediaType::Tv),
            "literature" | "book" | "books" => Some(MediaType::Literature),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            MediaType::Film => "film",
            MediaType::Tv => "tv",
            MediaType::Literature => "literature",
        }
    }
}

impl fmt::Display for MediaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named narrative pattern with a description and example occurrences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trope {
    pub trope_id: String,
    pub title: String,
    pub description: String,
    #[serde(default)]
    pub example_refs: Vec<String>,
}

/// One occurrence of a trope within a work.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example {
    pub example_id: String,
    pub trope_id: String,
    pub work_id: String,
    pub media_type: MediaType,
    pub text: String,
}

/// A film, TV show, or book referenced by examples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Work {
    pub work_id: String,
    pub title: String,
    pub media_type: MediaType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub release_year: Option<i32>,
}

/// Collapse internal whitespace runs to single spaces and trim the ends.
pub fn normalize_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Stable work id: hash of (normalized title, media type, year).
pub fn work_id(title: &str, media_type: MediaType, release_year: Option<i32>) -> String {
    let normalized = crate::linkage::normalize_title(title);
    let mut hasher = Sha256::new();
    hasher.update(normalized.as_bytes());
    hasher.update(b"\x1f");
    hasher.update(media_type.as_str().as_bytes());
    hasher.update(b"\x1f");
    match release_year {
        Some(y) => hasher.update(y.to_string().as_bytes()),
        None => hasher.update(b"-"),
    }
    let digest = hasher.finalize();
    let mut id = String::with_capacity(17);
    id.push('w');
    for byte in &digest[..8] {
        id.push_str(&format!("{byte:02x}"));
    }
    id
}

/// Trope id from a page URL or file name: the last path segment, lower-cased.
pub fn slug_from_url(url: &str) -> String {
    let trimmed = url.trim_end_matches('/');
    let last = trimmed.rsplit('/').next().unwrap_or(trimmed);
    let last = last.split(['?', '#']).next().unwrap_or(last);
    let last = last.strip_suffix(".html").unwrap_or(last);
    last.to_lowercase()
}

/// An in-memory dataset: tropes, works, and examples, indexed by id.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub tropes: Vec<Trope>,
    pub works: Vec<Work>,
    pub examples: Vec<Example>,
}

impl Corpus {
    pub fn new(mut tropes: Vec<Trope>, mut works: Vec<Work>, mut examples: Vec<Example>) -> Self {
        tropes.sort_by(|a, b| a.trope_id.cmp(&b.trope_id));
        works.sort_by(|a, b| a.work_id.cmp(&b.work_id));
        examples.sort_by(|a, b| a.example_id.cmp(&b.example_id));
        Self {
            tropes,
            works,
            examples,
        }
    }

    pub fn trope(&self, trope_id: &str) -> Option<&Trope> {
        self.tropes
            .binary_search_by(|t| t.trope_id.as_str().cmp(trope_id))
            .ok()
            .map(|i| &self.tropes[i])
    }

    pub fn work(&self, work_id: &str) -> Option<&Work> {
        self.works
            .binary_search_by(|w| w.work_id.as_str().cmp(work_id))
            .ok()
            .map(|i| &self.works[i])
    }

    /// Examples grouped per trope, ordered by example id within each group.
    pub fn examples_by_trope(&self) -> BTreeMap<&str, Vec<&Example>> {
        let mut map: BTreeMap<&str, Vec<&Example>> = BTreeMap::new();
        for ex in &self.examples {
            map.entry(ex.trope_id.as_str()).or_default().push(ex);
        }
        map
    }

    /// Examples grouped per work, ordered by example id within each group.
    pub fn examples_by_work(&self) -> BTreeMap<&str, Vec<&Example>> {
        let mut map: BTreeMap<&str, Vec<&Example>> = BTreeMap::new();
        for ex in &self.examples {
            map.entry(ex.work_id.as_str()).or_default().push(ex);
        }
        map
    }

    /// Total example count per trope across the whole dataset.
    pub fn trope_example_counts(&self) -> BTreeMap<&str, usize> {
        let mut map: BTreeMap<&str, usize> = BTreeMap::new();
        for ex in &self.examples {
            *map.entry(ex.trope_id.as_str()).or_default() += 1;
        }
        map
    }

    pub fn stats(&self) -> CorpusStats {
        corpus_stats(self)
    }
}

/// Per-media and total counts over a corpus.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CorpusStats {
    pub per_media: BTreeMap<MediaType, MediaStats>,
    /// Distinct tropes with at least one example in any medium.
    pub total_tropes: usize,
    pub total_titles: usize,
    pub total_examples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct MediaStats {
    /// Distinct works of this medium referenced by at least one example.
    pub titles: usize,
    /// Distinct tropes with at least one example in this medium.
    pub tropes: usize,
    pub examples: usize,
}

/// Exact set-cardinality counts per medium plus overall totals.
pub fn corpus_stats(corpus: &Corpus) -> CorpusStats {
    let mut titles: BTreeMap<MediaType, BTreeSet<&str>> = BTreeMap::new();
    let mut tropes: BTreeMap<MediaType, BTreeSet<&str>> = BTreeMap::new();
    let mut examples: BTreeMap<MediaType, usize> = BTreeMap::new();
    let mut all_tropes: BTreeSet<&str> = BTreeSet::new();
    let mut all_titles: BTreeSet<&str> = BTreeSet::new();

    for ex in &corpus.examples {
        titles.entry(ex.media_type).or_default().insert(&ex.work_id);
        tropes.entry(ex.media_type).or_default().insert(&ex.trope_id);
        *examples.entry(ex.media_type).or_default() += 1;
        all_tropes.insert(&ex.trope_id);
        all_titles.insert(&ex.work_id);
    }

    let mut per_media = BTreeMap::new();
    for media in MediaType::ALL {
        per_media.insert(
            media,
            MediaStats {
                titles: titles.get(&media).map_or(0, BTreeSet::len),
                tropes: tropes.get(&media).map_or(0, BTreeSet::len),
                examples: examples.get(&media).copied().unwrap_or(0),
            },
        );
    }

    CorpusStats {
        per_media,
        total_tropes: all_tropes.len(),
        total_titles: all_titles.len(),
        total_examples: corpus.examples.len(),
    }
}
