//! Regenerates the bundled named-graph catalog (`data/named/catalog.g6`
//! plus its name index) from the built-in constructors. Run after touching
//! a constructor:
//!
//! ```text
//! cargo run -p equidist --example regen_catalog
//! ```

use equidist::{graph6, named};
use std::fmt::Write as _;

fn main() {
    let mut g6 = String::new();
    let mut index = String::new();
    for (line, (name, ctor)) in named::fixed_named().iter().enumerate() {
        let g = ctor();
        writeln!(g6, "{}", graph6::encode_graph6(&g)).unwrap();
        writeln!(index, "{name}\t{}", line + 1).unwrap();
    }
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/named");
    std::fs::create_dir_all(dir).unwrap();
    std::fs::write(format!("{dir}/catalog.g6"), g6).unwrap();
    std::fs::write(format!("{dir}/catalog.index"), index).unwrap();
    println!("catalog written to {dir}");
}
