// Latest-wins request management: every rollout request carries a
// monotone sequence number; a response is dropped when a newer request
// has been issued since (rapid scrubs must never render stale curves).

export interface LatestWins<T> {
  issue(run: () => Promise<T>): Promise<T | undefined>;
  inFlight(): boolean;
}

export function latestWins<T>(onFresh: (value: T) => void): LatestWins<T> {
  let seq = 0;
  let settled = 0;

  return {
    async issue(run: () => Promise<T>): Promise<T | undefined> {
      const mine = ++seq;
      try {
        const value = await run();
        if (mine < seq) return undefined; // superseded while in flight
        settled = mine;
        onFresh(value);
        return value;
      } catch (err) {
        if (mine === seq) throw err;
        return undefined; // stale failures are uninteresting
      }
    },
    inFlight() {
      return settled < seq;
    },
  };
}
