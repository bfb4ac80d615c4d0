//! Writes a constructed code to a spec file, reads it back, and reports.

use tgrs::analysis::{analyze, OracleBudget};
use tgrs::codespec::CodeSpecFile;
use tgrs::constructions::{construct_t36, BuildOptions, T36Params};

fn main() -> tgrs::Result<()> {
    let built = construct_t36(
        &T36Params {
            q: 31,
            beta: "1".into(),
            n: 4,
            j: 0,
        },
        &BuildOptions::default(),
    )?;
    let json = CodeSpecFile::from_construction(&built).to_json();
    println!("{json}");

    let path = std::env::temp_dir().join("tgrs-example-spec.json");
    std::fs::write(&path, &json).expect("temp dir is writable");
    let text = std::fs::read_to_string(&path).expect("just written");
    let code = CodeSpecFile::from_json(&text)?.to_code()?;
    assert_eq!(code.alpha(), built.code.alpha());

    let report = analyze(&code, Some(OracleBudget::default()))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(())
}
