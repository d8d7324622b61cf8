fn main() {
    std::process::exit(cluster_core::cli::run(std::env::args_os()));
}
