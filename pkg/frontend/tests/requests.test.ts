import { describe, expect, it } from "vitest";

import { latestWins } from "../src/requests.js";

function deferred<T>() {
  let resolve!: (v: T) => void;
  let reject!: (e: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

describe("latestWins", () => {
  it("delivers in-order responses", async () => {
    const seen: string[] = [];
    const channel = latestWins<string>((v) => seen.push(v));
    await channel.issue(async () => "a");
    await channel.issue(async () => "b");
    expect(seen).toEqual(["a", "b"]);
  });

  it("drops a response superseded while in flight", async () => {
    const seen: string[] = [];
    const channel = latestWins<string>((v) => seen.push(v));
    const slow = deferred<string>();
    const first = channel.issue(() => slow.promise);
    const second = channel.issue(async () => "fresh");
    await second;
    slow.resolve("stale");
    expect(await first).toBeUndefined();
    expect(seen).toEqual(["fresh"]);
  });

  it("ignores failures of superseded requests", async () => {
    const seen: string[] = [];
    const channel = latestWins<string>((v) => seen.push(v));
    const slow = deferred<string>();
    const first = channel.issue(() => slow.promise);
    await channel.issue(async () => "fresh");
    slow.reject(new Error("boom"));
    await expect(first).resolves.toBeUndefined();
    expect(seen).toEqual(["fresh"]);
  });

  it("propagates failures of the freshest request", async () => {
    const channel = latestWins<string>(() => {});
    await expect(
      channel.issue(async () => {
        throw new Error("boom");
      }),
    ).rejects.toThrow("boom");
  });
});
