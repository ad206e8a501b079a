//! Golden-table verification: rebuild the published example codes and
//! re-check certificates, hull ranks, and the MDS property.
//!
//! Run with: cargo run --example reproduce_tables

use galois_grs::tables::{reproduce, Depth, Feasibility, TableId};

fn main() {
    for id in [TableId::T6, TableId::T7, TableId::Q1] {
        let report = reproduce(id, Depth::Fast, 1);
        println!("table {}:", report.table.name());
        for row in &report.rows {
            let class = match row.class {
                Feasibility::Fast => "fast",
                Feasibility::Slow => "slow",
                Feasibility::ParametersOnly => "params-only",
            };
            println!(
                "  [{}] ({class}) {}",
                if row.pass() { "PASS" } else { "FAIL" },
                row.label
            );
            for c in &row.checks {
                if !c.pass {
                    println!("      {}: {}", c.name, c.detail);
                }
            }
        }
        let passed = report.rows.iter().filter(|r| r.pass()).count();
        println!("  => {passed}/{} rows pass\n", report.rows.len());
    }
}
