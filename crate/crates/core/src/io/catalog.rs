use std::fmt::Write;
use std::time::Instant;

use crate::analysis::{ahm_bound, mixed_lower_bound, moore_bound, verify_zrg};
use crate::generators::{gen_family, FamilyParams};

use super::IoError;

pub const CSV_HEADER: &str = "q,p,z,r,order,girth_verified,family_upper,moore,ahm,mixed_lower";

/// One verified member of the girth-6 family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub q: u32,
    pub p: u32,
    pub z: u32,
    pub r: u32,
    pub order: u64,
    pub girth_verified: bool,
    pub family_upper: u64,
    pub moore: u64,
    /// Only reported for `z = 1`, where it bounds the same cage.
    pub ahm: Option<u64>,
    pub mixed_lower: u64,
    pub verify_runtime_ms: u128,
}

pub fn build_catalog(q_list: &[u32]) -> Result<Vec<CatalogRow>, IoError> {
    q_list
        .iter()
        .map(|&q| {
            let params = FamilyParams::new(q)?;
            let graph = gen_family(q)?;
            let started = Instant::now();
            let report = verify_zrg(&graph, params.z as usize, params.r as usize, 6);
            let verify_runtime_ms = started.elapsed().as_millis();
            let (z, r) = (u64::from(params.z), u64::from(params.r));
            Ok(CatalogRow {
                q,
                p: params.p,
                z: params.z,
                r: params.r,
                order: graph.order() as u64,
                girth_verified: report.passed,
                family_upper: params.order(),
                moore: moore_bound(r, 6)?,
                ahm: if z == 1 { Some(ahm_bound(r, 6)?) } else { None },
                mixed_lower: mixed_lower_bound(z, r, 6)?.value,
                verify_runtime_ms,
            })
        })
        .collect()
}

fn opt(v: Option<u64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// CSV without the runtime column, so output is reproducible.
pub fn catalog_csv(rows: &[CatalogRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            row.q,
            row.p,
            row.z,
            row.r,
            row.order,
            row.girth_verified,
            row.family_upper,
            row.moore,
            opt(row.ahm),
            row.mixed_lower
        );
    }
    out
}

pub fn catalog_markdown(rows: &[CatalogRow]) -> String {
    let mut out = String::from(
        "| q | p | z | r | order | girth_verified | family_upper | moore | ahm | mixed_lower | verify_runtime_ms |\n\
         |---|---|---|---|---|---|---|---|---|---|---|\n",
    );
    for row in rows {
        let ahm = row.ahm.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            row.q,
            row.p,
            row.z,
            row.r,
            row.order,
            row.girth_verified,
            row.family_upper,
            row.moore,
            ahm,
            row.mixed_lower,
            row.verify_runtime_ms
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalog() {
        let rows = build_catalog(&[3, 5]).unwrap();
        assert_eq!(rows.iter().map(|r| r.order).collect::<Vec<_>>(), vec![36, 100]);
        assert!(rows.iter().all(|r| r.girth_verified));
        assert_eq!(rows[0].ahm, Some(30));
        assert_eq!(rows[0].mixed_lower, 30);
        let csv = catalog_csv(&rows);
        assert_eq!(csv.lines().next(), Some(CSV_HEADER));
        assert_eq!(csv.lines().nth(1), Some("3,1,1,3,36,true,36,14,30,30"));
        assert!(build_catalog(&[4]).is_err());
    }
}
