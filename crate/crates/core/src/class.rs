//! Classification of a vertex set against a monotone property, with
//! witnesses that can be re-checked independently.

use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionClass<W> {
    /// The set fails the property; the witness is something left unsatisfied.
    NotSolution(W),
    /// The set satisfies the property but the named member can be dropped.
    NotMinimal { removable: usize },
    /// Minimal: for every member, something only that member takes care of.
    Minimal(Vec<(usize, W)>),
}

impl<W> SolutionClass<W> {
    pub fn is_solution(&self) -> bool {
        !matches!(self, SolutionClass::NotSolution(_))
    }

    pub fn is_minimal(&self) -> bool {
        matches!(self, SolutionClass::Minimal(_))
    }
}

/// Classifies `set` given a function returning a failure witness for any set
/// (or `None` when the property holds). The property must be upward closed;
/// then a set is minimal iff every single-vertex deletion fails, and the
/// failure witness of `set - {x}` is exactly what only `x` provides.
/// When several members are removable the highest index is reported.
pub fn classify_with<W>(
    set: &VertexSet,
    failure: impl Fn(&VertexSet) -> Option<W>,
) -> SolutionClass<W> {
    if let Some(w) = failure(set) {
        return SolutionClass::NotSolution(w);
    }
    let mut private = Vec::with_capacity(set.len());
    for x in set.to_vec().into_iter().rev() {
        let mut smaller = set.clone();
        smaller.remove(x);
        match failure(&smaller) {
            Some(w) => private.push((x, w)),
            None => return SolutionClass::NotMinimal { removable: x },
        }
    }
    private.reverse();
    SolutionClass::Minimal(private)
}
