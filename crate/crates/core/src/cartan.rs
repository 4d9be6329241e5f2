//! Cartan types and their Cartan matrices (Bourbaki labelling).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A simple Cartan type such as `A2` or `E8`.
///
/// `C2` is accepted and built as the rank-2 type with the long simple root
/// last; it is isomorphic to `B2` with the labels of the two simple roots
/// swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let reason = match series {
            Series::A if rank < 1 => Some("series A needs rank >= 1"),
            Series::B if rank < 2 => Some("series B needs rank >= 2"),
            Series::C if rank < 2 => Some("series C needs rank >= 2 (C2 is B2)"),
            Series::D if rank < 4 => Some("series D needs rank >= 4"),
            Series::E if !(6..=8).contains(&rank) => Some("series E needs rank 6, 7 or 8"),
            Series::F if rank != 4 => Some("series F only exists in rank 4"),
            Series::G if rank != 2 => Some("series G only exists in rank 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidRank {
                series: series.letter(),
                rank,
                reason,
            }),
            None => Ok(CartanType { series, rank }),
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All simple types with rank at most `max_rank`, skipping `C2`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for series in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for rank in 1..=max_rank {
                if series == Series::C && rank == 2 {
                    continue;
                }
                if let Ok(t) = CartanType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Cartan matrix with entries `a[i][j] = <alpha_i^vee, alpha_j>`, so the
    /// fundamental coordinates of `alpha_j` form column `j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A => (1..l).for_each(|i| link(i - 1, i)),
            Series::B => {
                (1..l).for_each(|i| link(i - 1, i));
                // alpha_l is short
                a[l - 1][l - 2] = -2;
            }
            Series::C => {
                (1..l).for_each(|i| link(i - 1, i));
                // alpha_l is long
                a[l - 2][l - 1] = -2;
            }
            Series::D => {
                (1..l - 1).for_each(|i| link(i - 1, i));
                link(l - 3, l - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                (3..l).for_each(|i| link(i - 1, i));
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
                a[2][1] = -2;
            }
            Series::G => {
                // alpha_1 short, alpha_2 long
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let first = chars
            .next()
            .ok_or_else(|| Error::BadTypeString(s.to_string()))?;
        let series = Series::from_letter(first).ok_or_else(|| {
            if first.is_ascii_alphabetic() {
                Error::UnknownSeries(first.to_string())
            } else {
                Error::BadTypeString(s.to_string())
            }
        })?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadTypeString(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_is_case_insensitive_and_canonical() {
        let t: CartanType = "e8".parse().unwrap();
        assert_eq!(t.to_string(), "E8");
        assert_eq!("G2".parse::<CartanType>().unwrap().rank(), 2);
        assert_eq!(" b3 ".parse::<CartanType>().unwrap().to_string(), "B3");
    }

    #[test]
    fn rejects_bad_ranks_and_series() {
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3"] {
            assert!(
                matches!(bad.parse::<CartanType>(), Err(Error::InvalidRank { .. })),
                "{bad}"
            );
        }
        assert!(matches!(
            "Z9".parse::<CartanType>(),
            Err(Error::UnknownSeries(_))
        ));
        assert!(matches!(
            "A".parse::<CartanType>(),
            Err(Error::BadTypeString(_))
        ));
        assert!(matches!(
            "".parse::<CartanType>(),
            Err(Error::BadTypeString(_))
        ));
    }

    #[test]
    fn unknown_series_message_lists_valid_letters() {
        let msg = "Z9".parse::<CartanType>().unwrap_err().to_string();
        assert!(msg.contains("A, B, C, D, E, F, G"), "{msg}");
    }

    #[test]
    fn b2_and_c2_are_transposes() {
        let b2 = CartanType::new(Series::B, 2).unwrap().cartan_matrix();
        let c2 = CartanType::new(Series::C, 2).unwrap().cartan_matrix();
        assert_eq!(b2, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(c2, vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn simply_laced_matrices_are_symmetric() {
        for t in ["A5", "D6", "E6", "E7", "E8"] {
            let a = t.parse::<CartanType>().unwrap().cartan_matrix();
            for i in 0..a.len() {
                for j in 0..a.len() {
                    assert_eq!(a[i][j], a[j][i], "{t}");
                }
            }
        }
    }

    #[test]
    fn default_sweep_up_to_rank_three() {
        let names: Vec<String> = CartanType::all_up_to_rank(3)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(names, ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]);
    }
}
