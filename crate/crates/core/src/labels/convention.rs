use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::data::{row_by_carter, row_by_kondo, IOTA_SWAPS, TABLE1, TABLE2};
use super::names::{CarterLabel, KondoLabel};
use crate::error::{Error, Result};
use crate::f4chars::{build_all, F4Group};

/// Which generators are reflections in long roots.
///
/// `C`: `d, a` are reflections in long roots (the internal identification
/// `d = s1, a = s2, τ = s3, τσ = s4`). `L`: `d, a` are reflections in short
/// roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Convention {
    C,
    L,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "C" => Ok(Self::C),
            "L" => Ok(Self::L),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

/// The permutation of Kondo labels induced by `s1 ↔ s4, s2 ↔ s3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Iota {
    pub map: BTreeMap<KondoLabel, KondoLabel>,
}

impl Iota {
    pub fn apply(&self, k: KondoLabel) -> KondoLabel {
        self.map[&k]
    }

    /// Non-trivial 2-cycles, each listed once with the smaller label first.
    pub fn swaps(&self) -> Vec<(KondoLabel, KondoLabel)> {
        self.map
            .iter()
            .filter(|(a, b)| a < b)
            .map(|(a, b)| (*a, *b))
            .collect()
    }
}

/// Computes ι by precomposing every character with the diagram flip and
/// re-identifying it among the 25, then checks the result against the
/// listed swaps.
pub fn iota() -> Result<Iota> {
    let g = F4Group::get();
    let chars = build_all()?;
    let flip: Vec<usize> = (0..g.num_classes()).map(|c| g.flip_class(c)).collect();
    let mut map = BTreeMap::new();
    for x in &chars {
        let twisted: Vec<i64> = flip.iter().map(|&c| x.values[c]).collect();
        let y = chars.iter().find(|y| y.values == twisted).ok_or_else(|| {
            Error::LabelMismatch(format!("{} ∘ flip is not irreducible", x.kondo))
        })?;
        map.insert(x.kondo, y.kondo);
    }
    let iota = Iota { map };
    let mut expected: Vec<_> = IOTA_SWAPS
        .iter()
        .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    expected.sort();
    if iota.swaps() != expected {
        return Err(Error::LabelMismatch(format!(
            "computed swaps {:?} differ from the listed ones",
            iota.swaps()
                .iter()
                .map(|(a, b)| format!("{a}<->{b}"))
                .collect::<Vec<_>>()
        )));
    }
    Ok(iota)
}

#[derive(Clone, Debug, Serialize)]
pub struct Assignment {
    /// Index into `build_all()`: the concrete character.
    pub character: usize,
    /// Label of the character under the internal identification.
    pub internal: KondoLabel,
    pub kondo: KondoLabel,
    pub carter: CarterLabel,
}

pub fn assign_labels(convention: Convention) -> Result<Vec<Assignment>> {
    let chars = build_all()?;
    let iota = match convention {
        Convention::C => None,
        Convention::L => Some(iota()?),
    };
    Ok(chars
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let kondo = iota.as_ref().map_or(x.kondo, |t| t.apply(x.kondo));
            Assignment {
                character: i,
                internal: x.kondo,
                kondo,
                carter: row_by_kondo(kondo).expect("dataset row").carter,
            }
        })
        .collect())
}

/// Carter's names against Kondo names read in convention (L), in the
/// printed order. Each pair is computed from the Table 1 map composed with ι
/// and compared row-for-row with the printed scheme.
pub fn conversion_table() -> Result<Vec<(CarterLabel, KondoLabel)>> {
    let iota = iota()?;
    let mut out = Vec::with_capacity(25);
    for (i, &(carter, printed)) in TABLE2.iter().enumerate() {
        let row = row_by_carter(carter).ok_or_else(|| {
            Error::LabelMismatch(format!("{carter} missing from the label table"))
        })?;
        let k = iota.apply(row.kondo);
        if k != printed {
            return Err(Error::LabelMismatch(format!(
                "row {}: {carter} -> {k}, printed {printed}",
                i + 1
            )));
        }
        out.push((carter, k));
    }
    Ok(out)
}

/// Kondo labels whose Carter partner changes between the two tables.
pub fn changed_labels(table: &[(CarterLabel, KondoLabel)]) -> Vec<KondoLabel> {
    let mut v: Vec<KondoLabel> = table
        .iter()
        .filter(|(c, k)| row_by_carter(*c).map(|r| r.kondo) != Some(*k))
        .map(|p| p.1)
        .collect();
    v.sort();
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyMember {
    pub unip_label: &'static str,
    pub pair: (&'static str, &'static str),
    pub carter_side: &'static str,
    pub carter_pair: (&'static str, &'static str),
}

impl fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<8} ({}, {})    {:<10} ({}, {})",
            self.unip_label,
            self.pair.0,
            self.pair.1,
            self.carter_side,
            self.carter_pair.0,
            self.carter_pair.1
        )
    }
}

pub const FAMILY_NOTE: &str =
    "the labels φ_{2,4}″ and φ_{2,4}′ in Carter's table should be exchanged to match the conversion scheme";

/// The four unipotent characters of F4(q) in the family of `[4_2]`.
pub fn family_a1() -> Vec<FamilyMember> {
    vec![
        FamilyMember {
            unip_label: "[4_2]",
            pair: ("1", "1"),
            carter_side: "φ_{4,1}",
            carter_pair: ("1", "1"),
        },
        FamilyMember {
            unip_label: "[2_1]",
            pair: ("g2", "1"),
            carter_side: "φ_{2,4}″",
            carter_pair: ("g2", "1"),
        },
        FamilyMember {
            unip_label: "[2_3]",
            pair: ("1", "ε"),
            carter_side: "φ_{2,4}′",
            carter_pair: ("1", "ε"),
        },
        FamilyMember {
            unip_label: "B2[1]",
            pair: ("g2", "ε"),
            carter_side: "B2,1",
            carter_pair: ("g2", "ε"),
        },
    ]
}

/// Naming schemes accepted by [`convert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    /// Kondo labels read in convention (L).
    Lusztig,
    Carter,
    /// Kondo labels read in convention (C).
    Kondo,
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lusztig" | "l" => Ok(Self::Lusztig),
            "carter" => Ok(Self::Carter),
            "kondo" | "chevie" | "c" => Ok(Self::Kondo),
            _ => Err(Error::Parse(format!("unknown labelling scheme {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum AnyLabel {
    Kondo(KondoLabel),
    Carter(CarterLabel),
}

impl fmt::Display for AnyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Kondo(k) => write!(f, "{k}"),
            Self::Carter(c) => write!(f, "{c}"),
        }
    }
}

fn to_carter(from: Scheme, label: &str, iota: &Iota) -> Result<CarterLabel> {
    Ok(match from {
        Scheme::Carter => label.parse()?,
        Scheme::Kondo => {
            let k: KondoLabel = label.parse()?;
            row_by_kondo(k)
                .ok_or_else(|| Error::Parse(format!("no character {k}")))?
                .carter
        }
        Scheme::Lusztig => {
            let k: KondoLabel = label.parse()?;
            if row_by_kondo(k).is_none() {
                return Err(Error::Parse(format!("no character {k}")));
            }
            row_by_kondo(iota.apply(k)).unwrap().carter
        }
    })
}

fn from_carter(to: Scheme, c: CarterLabel, iota: &Iota) -> Result<AnyLabel> {
    let row = row_by_carter(c).ok_or_else(|| Error::Parse(format!("no character {c}")))?;
    Ok(match to {
        Scheme::Carter => AnyLabel::Carter(c),
        Scheme::Kondo => AnyLabel::Kondo(row.kondo),
        Scheme::Lusztig => AnyLabel::Kondo(iota.apply(row.kondo)),
    })
}

/// Translates one label between schemes.
pub fn convert(from: Scheme, to: Scheme, label: &str) -> Result<AnyLabel> {
    let iota = iota()?;
    from_carter(to, to_carter(from, label, &iota)?, &iota)
}

/// The whole translation table, ordered by the source label as it appears
/// in the label table.
pub fn convert_all(from: Scheme, to: Scheme) -> Result<Vec<(AnyLabel, AnyLabel)>> {
    let iota = iota()?;
    let mut out = Vec::with_capacity(25);
    for row in TABLE1 {
        let src = from_carter(from, row.carter, &iota)?;
        out.push((src, from_carter(to, row.carter, &iota)?));
    }
    Ok(out)
}
