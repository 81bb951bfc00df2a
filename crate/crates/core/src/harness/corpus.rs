use std::path::Path;

use crate::error::{Error, Result};
use crate::expr::{evaluate, parse, RingExpr};
use crate::limits::Limits;
use crate::ring::FiniteRing;

/// The default corpus, in corpus-file format.
pub const DEFAULT_CORPUS: &str = "\
# integers mod n
Z/2
Z/3
Z/4
Z/5
Z/6
Z/7
Z/8
Z/9
Z/10
Z/11
Z/12
Z/13
Z/14
Z/15
Z/16
Z/18
Z/24
Z/27
Z/36
# fields
GF(2, 2)
GF(3, 2)
# matrix and triangular rings
M(2, Z/2)
M(2, Z/3)
M(2, Z/4)
UT(2, Z/2)
UT(2, Z/4)
UT(3, Z/2)
UT(2, Z/5)
# extensions
TE(Z/2)
TE(Z/4)
TE(Z/3)
TE(Z/9)
BT(Z/2)
BT(Z/3)
BT(Z/5)
NIL(Z/2, 2)
NIL(Z/2, 3)
NIL(Z/3, 2)
# group rings
GR(Z/2, C2)
GR(Z/2, C3)
GR(Z/2, C4)
GR(Z/2, C2 x C2)
GR(Z/4, C2)
GR(Z/4, C3)
GR(Z/3, C2)
GR(Z/9, C2)
GR(Z/2, S3)
";

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// `None` for rings added directly from tables.
    pub expr: Option<RingExpr>,
    pub ring: FiniteRing,
}

impl CorpusEntry {
    pub fn label(&self) -> &str {
        self.ring.label()
    }
}

/// An ordered list of rings the claims are checked over.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub name: String,
    entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn new(name: impl Into<String>) -> Corpus {
        Corpus {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn default_corpus(limits: &Limits) -> Result<Corpus> {
        Corpus::parse("default", DEFAULT_CORPUS, limits)
    }

    /// Parses corpus text: one expression per line, `#` starts a comment,
    /// blank lines are ignored. Fails on the first bad line, reporting its
    /// 1-based number.
    pub fn parse(name: impl Into<String>, text: &str, limits: &Limits) -> Result<Corpus> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let entry = parse(content)
                .map_err(Error::from)
                .and_then(|e| Ok((evaluate(&e, limits)?, e)))
                .map_err(|source| Error::Corpus {
                    line: i + 1,
                    source: Box::new(source),
                })?;
            entries.push(CorpusEntry {
                expr: Some(entry.1),
                ring: entry.0,
            });
        }
        Ok(Corpus {
            name: name.into(),
            entries,
        })
    }

    pub fn load(path: impl AsRef<Path>, limits: &Limits) -> Result<Corpus> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Corpus::parse(path.display().to_string(), &text, limits)
    }

    /// Adds a ring that has no expression, e.g. one read from a table dump.
    pub fn push_ring(&mut self, ring: FiniteRing) {
        self.entries.push(CorpusEntry { expr: None, ring });
    }

    pub(crate) fn push_entry(&mut self, entry: CorpusEntry) {
        self.entries.push(entry);
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn rings(&self) -> impl Iterator<Item = &FiniteRing> {
        self.entries.iter().map(|e| &e.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_loads() {
        let c = Corpus::default_corpus(&Limits::default()).unwrap();
        assert_eq!(c.len(), 47);
        assert_eq!(c.rings().map(|r| r.order()).max(), Some(625));
        assert_eq!(c.entries()[19].label(), "GF(2, 2)");
    }

    #[test]
    fn load_failures_name_the_line() {
        let text = "Z/4\n\n# comment\nZ/6  # trailing\nM(2, Z/1)\n";
        match Corpus::parse("t", text, &Limits::default()) {
            Err(Error::Corpus { line, source }) => {
                assert_eq!(line, 5);
                assert!(matches!(*source, Error::Parse(_)));
            }
            other => panic!("{other:?}"),
        }
        let err = Corpus::parse(
            "t",
            "Z/2\nM(3, Z/4)",
            &Limits::default().with_max_order(100),
        );
        assert!(matches!(err, Err(Error::Corpus { line: 2, .. })));
        let ok = Corpus::parse(
            "t",
            "Z/4\n\n# comment\nZ/6  # trailing\n",
            &Limits::default(),
        );
        assert_eq!(ok.unwrap().len(), 2);
    }
}
