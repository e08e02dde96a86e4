//! Embedded golden decomposition tables (ASCII form, one row per line:
//! `N L fraction + fraction + ...`). Checked once by hand at creation
//! time; the verification suites compare freshly computed output against
//! them.

pub const TABLE_N3: &str = include_str!("../fixtures/table_n3.txt");
pub const TABLE_N4: &str = include_str!("../fixtures/table_n4.txt");
pub const TABLE_N5: &str = include_str!("../fixtures/table_n5.txt");

/// All golden rows as (N, L, full row text).
pub fn golden_rows() -> Vec<(u32, u32, &'static str)> {
    [TABLE_N3, TABLE_N4, TABLE_N5]
        .iter()
        .flat_map(|table| table.lines())
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let mut parts = line.splitn(3, ' ');
            let n = parts.next().unwrap().parse().unwrap();
            let l = parts.next().unwrap().parse().unwrap();
            (n, l, line)
        })
        .collect()
}
