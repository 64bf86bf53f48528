//! Invariants of a group computed once and shared by the verifier and reports.

use crate::commutators::{commutator_set, compare, two_commutator_width, Comparison};
use crate::pc::{Code, PcGroup};
use crate::structure::{
    center, conjugacy_classes, conjugate_type, lower_central_series, nilpotency_class, ClassInfo,
    SeriesTerm, Subgroup,
};

pub struct Analysis<'g> {
    pub group: &'g PcGroup,
    pub series: Vec<SeriesTerm>,
    pub center: Subgroup,
    pub classes: Vec<ClassInfo>,
    pub k: Vec<Code>,
    pub comparison: Comparison,
}

impl<'g> Analysis<'g> {
    pub fn new(group: &'g PcGroup) -> Self {
        let series = lower_central_series(group);
        let center = center(group);
        let classes = conjugacy_classes(group);
        let k = commutator_set(group);
        let comparison = compare(&k, &series[1].subgroup);
        Analysis {
            group,
            series,
            center,
            classes,
            k,
            comparison,
        }
    }

    pub fn p(&self) -> u32 {
        self.group.p()
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn gamma2(&self) -> &Subgroup {
        &self.series[1].subgroup
    }

    pub fn class(&self) -> usize {
        nilpotency_class(&self.series)
    }

    pub fn conjugate_type(&self) -> Vec<u64> {
        conjugate_type(&self.classes)
    }

    pub fn equal(&self) -> bool {
        self.comparison.equal
    }

    pub fn width2(&self) -> bool {
        self.comparison.equal || two_commutator_width(self.group, &self.k, self.gamma2())
    }

    /// A non-central class representative with class size `p`.
    pub fn maximal_centralizer_element(&self) -> Option<Code> {
        self.classes
            .iter()
            .find(|c| c.size == self.p() as u64)
            .map(|c| c.rep)
    }
}
