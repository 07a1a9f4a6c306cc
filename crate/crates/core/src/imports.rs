//! Deduplicated import lines for the emitted module.

use std::collections::BTreeSet;

/// Import statements required by translated code. Lines are compared by
/// exact text and emitted in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ImportSet {
    lines: BTreeSet<String>,
}

impl ImportSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records an import line. Adding a line twice has no effect.
    pub fn require(&mut self, line: impl Into<String>) -> &mut Self {
        self.lines.insert(line.into());
        self
    }

    pub fn contains(&self, line: &str) -> bool {
        self.lines.contains(line)
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn emit(&self) -> Vec<String> {
        self.lines.iter().cloned().collect()
    }
}
