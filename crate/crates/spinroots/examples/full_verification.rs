//! Run the whole invariant battery on a few inputs through the command
//! layer, exactly as the `spinroots verify` subcommand does.

use spinroots::cli::{cmd_verify, ExperimentConfig, OutputFormat, PolySource};

fn main() {
    for text in ["(x-1)*(x-2)*(x-3)", "(x-1)^2", "x^2 + 1"] {
        let mut config = ExperimentConfig::new(PolySource::Expression(text.into()));
        config.format = OutputFormat::Text;
        config.seed = 11;
        let out = cmd_verify(&config);
        println!("=== verify {text} (exit {}) ===", out.exit_code);
        println!("{}", out.body);
        println!();
    }
}
