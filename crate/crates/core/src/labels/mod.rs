//! Character names for W(F4) and the conversions between them.

mod convention;
mod data;
mod degrees;
mod names;

pub use convention::{
    assign_labels, changed_labels, conversion_table, convert, convert_all, family_a1, iota,
    AnyLabel, Assignment, Convention, FamilyMember, Iota, Scheme, FAMILY_NOTE,
};
pub use data::{row_by_carter, row_by_kondo, LabelRow, IOTA_SWAPS, TABLE1, TABLE2};
pub use degrees::{
    degree_report, discrepancies, evaluate, Claim, ClaimStatus, DegreeCase, DegreeReport,
    Evaluation,
};
pub use names::{CarterLabel, KondoLabel, Prime};
