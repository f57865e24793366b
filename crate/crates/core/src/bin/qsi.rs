use clap::Parser;
use qsi::cli::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(n) = std::env::var("QSI_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("worker pool is configured once");
    }
    let out = run(&cli);
    print!("{}", out.report);
    std::process::exit(out.code);
}
