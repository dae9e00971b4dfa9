//! Running commands the way the binary does, with an on-disk cache.

use knotrace::app::{run, Command, RunOptions};
use knotrace::cache::Cache;

fn main() -> knotrace::Result<()> {
    let dir = std::env::temp_dir().join("knotrace-example-cache");
    let options = RunOptions { cache: Some(Cache::new(&dir)) };
    let command = Command::Compare {
        first: "lib:T23".into(),
        second: "lib:fig8".into(),
        framing: 0,
    };
    let first = run(&command, &options)?;
    let second = run(&command, &options)?;
    assert_eq!(first, second);
    print!("{}", first.to_text());
    println!("cache directory: {}", dir.display());
    Ok(())
}
