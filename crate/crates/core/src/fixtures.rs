//! Checked-in reference data: the sporadic-group table and the oracle
//! generator fixtures. File formats are line-oriented `|`-separated records,
//! documented at the top of each data file.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::group_id::Sporadic;

/// One row of the sporadic table.
#[derive(Debug, Clone)]
pub struct SporadicData {
    pub order: BigUint,
    pub mindeg: BigUint,
    pub out_order: u64,
    /// Guaranteed ordinary index for the exceptional members (M12, O'N, Tits).
    pub v: Option<BigUint>,
}

pub fn sporadic_table() -> &'static HashMap<Sporadic, SporadicData> {
    static TABLE: OnceLock<HashMap<Sporadic, SporadicData>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let raw = include_str!("../data/sporadic_groups.txt");
        let mut table = HashMap::new();
        for line in raw.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('|').collect();
            assert_eq!(cols.len(), 5, "bad sporadic record: {line}");
            let name = Sporadic::from_name(cols[0])
                .unwrap_or_else(|| panic!("unknown sporadic name {}", cols[0]));
            let data = SporadicData {
                order: cols[1].parse().expect("order column"),
                mindeg: cols[2].parse().expect("mindeg column"),
                out_order: cols[3].parse().expect("out column"),
                v: match cols[4] {
                    "-" => None,
                    v => Some(v.parse().expect("v column")),
                },
            };
            table.insert(name, data);
        }
        assert_eq!(table.len(), 27, "sporadic table must have 27 rows");
        table
    })
}

pub fn sporadic(s: Sporadic) -> &'static SporadicData {
    &sporadic_table()[&s]
}

/// One oracle fixture: a named group given by two permutation generators.
#[derive(Debug, Clone)]
pub struct OracleFixture {
    pub name: String,
    pub degree: usize,
    pub gen_cycles: [String; 2],
}

pub fn oracle_fixtures() -> &'static Vec<OracleFixture> {
    static FIXTURES: OnceLock<Vec<OracleFixture>> = OnceLock::new();
    FIXTURES.get_or_init(|| {
        let raw = include_str!("../data/oracle_groups.txt");
        let mut out = Vec::new();
        for line in raw.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('|').collect();
            assert_eq!(cols.len(), 4, "bad oracle record: {line}");
            out.push(OracleFixture {
                name: cols[0].to_string(),
                degree: cols[1].parse().expect("degree column"),
                gen_cycles: [cols[2].to_string(), cols[3].to_string()],
            });
        }
        out
    })
}

pub fn oracle_fixture(name: &str) -> Option<&'static OracleFixture> {
    let lower = name.trim().to_ascii_lowercase();
    oracle_fixtures()
        .iter()
        .find(|fx| fx.name.to_ascii_lowercase() == lower)
}
