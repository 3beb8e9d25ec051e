//! The JSON analysis file format: exact entries in the scalar grammar, a
//! declared field and signature, and the full analysis pipeline on it.

use lieball::input::parse_algebra_file;
use lieball::report::{run_analysis, to_human_string, AnalysisRequest, Task};

fn main() -> lieball::Result<()> {
    // so(2,1) given by hand: eta = diag(-1,-1,1)
    let text = r#"{
        "D": 3,
        "field": "rat",
        "ambient_dim": 3,
        "signature": [2, 1],
        "name": "so(2,1) by hand",
        "generators": [
            [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]],
            [["0", "0", "1"], ["0", "0", "0"], ["1", "0", "0"]],
            [["0", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
        ]
    }"#;
    let input = parse_algebra_file(text)?;
    let request = AnalysisRequest {
        source: "inline".into(),
        input,
        tasks: vec![
            Task::Closure,
            Task::Commutant,
            Task::Irreducibility,
            Task::Type,
            Task::Forms,
            Task::Center,
            Task::Transitivity,
        ],
        seed: 0,
        budget: 64,
    };
    let report = run_analysis(&request)?;
    print!("{}", to_human_string(&report));
    Ok(())
}
