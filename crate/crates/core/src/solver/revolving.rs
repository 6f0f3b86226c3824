/// Revolving-door (minimal-change) enumeration of the `t`-subsets of
/// `{0, .., m-1}`, yielded as bit masks. Consecutive subsets differ by
/// removing one element and inserting another.
///
/// This is Knuth's Algorithm R (TAOCP 7.2.1.3); `t = 0`, `t = 1` and `t = m`
/// are handled directly.
#[derive(Debug, Clone)]
pub struct RevolvingDoor {
    m: usize,
    t: usize,
    // c[1..=t] ascending, c[t + 1] = m sentinel
    c: Vec<usize>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Start,
    Running,
    Done,
}

impl RevolvingDoor {
    pub fn new(m: usize, t: usize) -> Self {
        assert!(m <= 64, "revolving door masks are single words");
        let mut c = vec![0; t + 2];
        for (j, slot) in c.iter_mut().enumerate().take(t + 1).skip(1) {
            *slot = j - 1;
        }
        c[t + 1] = m;
        let state = if t > m { State::Done } else { State::Start };
        RevolvingDoor { m, t, c, state }
    }

    fn mask(&self) -> u64 {
        self.c[1..=self.t].iter().fold(0, |acc, &x| acc | 1 << x)
    }

    /// Advances `c`; false when the sequence is exhausted.
    fn step(&mut self) -> bool {
        let (t, m) = (self.t, self.m);
        if t == 0 || t == m {
            return false;
        }
        if t == 1 {
            if self.c[1] + 1 < m {
                self.c[1] += 1;
                return true;
            }
            return false;
        }
        let c = &mut self.c;
        let mut j = 2;
        let mut decrease = if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return true;
            }
            true
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                return true;
            }
            false
        };
        loop {
            if decrease {
                // here c[j] == c[j - 1] + 1
                if c[j] >= j {
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return true;
                }
            } else {
                // here c[j - 1] == j - 2
                if c[j] + 1 < c[j + 1] {
                    c[j - 1] = c[j];
                    c[j] += 1;
                    return true;
                }
            }
            j += 1;
            if j > t {
                return false;
            }
            decrease = !decrease;
        }
    }
}

impl Iterator for RevolvingDoor {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        match self.state {
            State::Done => None,
            State::Start => {
                self.state = State::Running;
                Some(self.mask())
            }
            State::Running => {
                if self.step() {
                    Some(self.mask())
                } else {
                    self.state = State::Done;
                    None
                }
            }
        }
    }
}
