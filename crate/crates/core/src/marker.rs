//! Marker identifiers and marker sets.
//!
//! Orders refer to markers by their index in a shared [`MarkerSet`]; the set
//! itself is reference counted so that every order over the same markers can
//! cheaply hold on to it.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A marker identifier: a nonempty string over `[A-Za-z0-9_+^-]`.
///
/// Markers compare by their identifier string, which is also the branch order
/// used by extension enumeration and every "ascending marker id" tie-break.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Marker(String);

impl Marker {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::invalid("empty marker id"));
        }
        if let Some(c) = id.chars().find(|c| !is_marker_char(*c)) {
            return Err(Error::invalid(format!(
                "marker id `{id}` contains invalid character `{c}`"
            )));
        }
        Ok(Marker(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn is_marker_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '+' | '^' | '-')
}

impl fmt::Display for Marker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for Marker {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Marker {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// An ordered collection of distinct markers. The order only fixes
/// serialization and index assignment.
#[derive(Debug, Clone)]
pub struct MarkerSet {
    markers: Vec<Marker>,
    index: HashMap<Marker, usize>,
    /// `id_rank[i]` is the position of marker `i` when all markers are sorted
    /// by identifier.
    id_rank: Vec<usize>,
}

impl PartialEq for MarkerSet {
    fn eq(&self, other: &Self) -> bool {
        self.markers == other.markers
    }
}

impl Eq for MarkerSet {}

impl MarkerSet {
    pub fn new(markers: Vec<Marker>) -> Result<Self> {
        let mut index = HashMap::with_capacity(markers.len());
        for (i, m) in markers.iter().enumerate() {
            if index.insert(m.clone(), i).is_some() {
                return Err(Error::invalid(format!("duplicate marker `{m}`")));
            }
        }
        let mut by_id: Vec<usize> = (0..markers.len()).collect();
        by_id.sort_by(|&a, &b| markers[a].cmp(&markers[b]));
        let mut id_rank = vec![0; markers.len()];
        for (rank, &i) in by_id.iter().enumerate() {
            id_rank[i] = rank;
        }
        Ok(MarkerSet {
            markers,
            index,
            id_rank,
        })
    }

    /// Builds a marker set from raw identifier strings.
    pub fn from_ids<I, S>(ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let markers = ids
            .into_iter()
            .map(Marker::new)
            .collect::<Result<Vec<_>>>()?;
        MarkerSet::new(markers)
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn len(&self) -> usize {
        self.markers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }

    pub fn marker(&self, idx: usize) -> &Marker {
        &self.markers[idx]
    }

    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownMarker(id.to_owned()))
    }

    /// Rank of marker `idx` in ascending identifier order.
    pub fn id_rank(&self, idx: usize) -> usize {
        self.id_rank[idx]
    }

    /// Marker indices sorted by identifier.
    pub fn indices_by_id(&self) -> Vec<usize> {
        let mut out = vec![0; self.len()];
        for (i, &r) in self.id_rank.iter().enumerate() {
            out[r] = i;
        }
        out
    }

    pub fn ids<'a>(&'a self, indices: &'a [usize]) -> impl Iterator<Item = &'a str> + 'a {
        indices.iter().map(move |&i| self.markers[i].as_str())
    }
}

/// True when two shared marker sets describe the same markers in the same
/// order.
pub fn same_markers(a: &Arc<MarkerSet>, b: &Arc<MarkerSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
