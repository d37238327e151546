fn main() {
    std::process::exit(link_homology::cli::run(std::env::args_os()));
}
