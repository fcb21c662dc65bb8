use std::cmp::Ordering;
use std::fmt;

/// Finitely supported sequence `(d_1, d_2, ...)` of generator counts per
/// degree, ordered by comparing from the highest index down.
///
/// Every strictly decreasing chain in this order is finite, which makes the
/// degree sequence of a generating system a termination measure for the
/// reduction loop.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DegreeSequence {
    // counts[i] is the entry at index i + 1; no trailing zeros
    counts: Vec<usize>,
}

impl DegreeSequence {
    /// Entries for indices `1, 2, ...`; trailing zeros are trimmed.
    pub fn from_counts(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        DegreeSequence { counts }
    }

    /// Counts how many of `degrees` equal each index. Degrees must be at least 1.
    pub fn from_degrees<I: IntoIterator<Item = u32>>(degrees: I) -> Self {
        let mut counts = Vec::new();
        for d in degrees {
            assert!(d >= 1, "degree sequences are indexed from 1");
            let i = d as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        DegreeSequence::from_counts(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Entry at `index >= 1`; zero beyond the support.
    pub fn get(&self, index: usize) -> usize {
        assert!(index >= 1);
        self.counts.get(index - 1).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Largest index with a nonzero entry.
    pub fn top_index(&self) -> Option<usize> {
        (!self.counts.is_empty()).then_some(self.counts.len())
    }

    /// Entry at [`Self::top_index`]; always positive.
    pub fn top_count(&self) -> Option<usize> {
        self.counts.last().copied()
    }

    /// The sequence with its last positive entry replaced by zero.
    pub fn without_top(&self) -> DegreeSequence {
        let mut counts = self.counts.clone();
        counts.pop();
        DegreeSequence::from_counts(counts)
    }

    /// `self > other`: some index has a larger entry in `self` while all
    /// higher indices agree.
    pub fn dominates(&self, other: &DegreeSequence) -> bool {
        self.cmp(other) == Ordering::Greater
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl Ord for DegreeSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.counts
            .len()
            .cmp(&other.counts.len())
            .then_with(|| self.counts.iter().rev().cmp(other.counts.iter().rev()))
    }
}

impl PartialOrd for DegreeSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `delta > eta` in the degree-sequence order.
pub fn seq_succ(delta: &DegreeSequence, eta: &DegreeSequence) -> bool {
    delta.dominates(eta)
}
