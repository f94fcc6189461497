// Turns a bursty stream into one with a fixed output clock.

use metric_enum::engine::{regularize_delay, ScriptedStream, SolutionStream};
use metric_enum::vset;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // ten solutions in two bursts, always ahead of a 20-tick schedule
    let arrivals = [1, 2, 3, 4, 5, 6, 90, 91, 92, 93];
    let script = arrivals.iter().enumerate().map(|(i, &t)| (vset(&[i]), t)).collect();
    let mut stream = regularize_delay(ScriptedStream::new(script, 150), 20);
    let mut last = 0;
    while let Some(s) = stream.next() {
        println!("{:>4}  (+{:>2})  {}", stream.ticks(), stream.ticks() - last, s.to_one_based_string());
        last = stream.ticks();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
