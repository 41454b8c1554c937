use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

fn main() {
    let interrupt = Arc::new(AtomicBool::new(false));
    let flag = interrupt.clone();
    let _ = ctrlc::set_handler(move || flag.store(true, Ordering::Relaxed));
    let code = foulkes::cli::run(
        std::env::args_os(),
        Some(interrupt),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
