use super::catalog::{small_group_catalog, CatalogGroup};
use super::{braces_on_group, EnumError, Result};
use crate::skew_brace::SkewBrace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub group_name: String,
    /// Position among the braces on this group, from 0.
    pub index: usize,
    pub brace: SkewBrace,
}

impl CorpusEntry {
    /// `<order>_<groupname>_<index>.brace`
    pub fn file_name(&self) -> String {
        format!(
            "{}_{}_{}.brace",
            self.brace.order(),
            self.group_name,
            self.index
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    /// Catalog groups whose holomorph is over the size limit.
    pub skipped: Vec<(String, EnumError)>,
}

impl Corpus {
    /// Entries for the braces on one catalog group, or `Err(TooLarge)`.
    pub fn for_group(g: &CatalogGroup) -> Result<Vec<CorpusEntry>> {
        Ok(braces_on_group(&g.group)?
            .into_iter()
            .enumerate()
            .map(|(index, brace)| CorpusEntry {
                group_name: g.name.clone(),
                index,
                brace,
            })
            .collect())
    }
}

/// All braces on all catalog groups of the given orders, in catalog order.
pub fn corpus(orders: &[usize]) -> Result<Corpus> {
    let mut out = Corpus::default();
    for &n in orders {
        for g in small_group_catalog(n)? {
            match Corpus::for_group(&g) {
                Ok(entries) => out.entries.extend(entries),
                Err(e @ EnumError::TooLarge { .. }) => out.skipped.push((g.name, e)),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}
