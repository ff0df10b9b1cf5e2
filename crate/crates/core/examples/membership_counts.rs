//! Count elements per region from membership data.
//!
//! `cargo run --example membership_counts`

use vennfan::data::{count_regions, parse_csv, parse_json};

const CSV: &str = "element,Mammal,Aquatic,Flies
whale,1,1,0
bat,1,0,1
penguin,0,1,0
gull,0,1,1
rock,0,0,0
";

// Sets map to member ids; `elements` may list ids that belong to no set.
const JSON: &str = r#"{"sets": {"A": ["x", "y"], "B": ["y"]}, "elements": ["z"]}"#;

fn main() -> vennfan::Result<()> {
    let data = parse_csv(CSV.as_bytes(), "inline.csv")?;
    let counts = count_regions(&data);
    println!("sets {:?}, {} elements", data.set_names, counts.total());
    for (mask, text) in counts.texts() {
        println!("  {} -> {text}", mask.to_bit_string(data.n()));
    }
    let data = parse_json(JSON, "inline.json")?;
    println!("json: {}", serde_json::to_string(&count_regions(&data)).unwrap());
    Ok(())
}
