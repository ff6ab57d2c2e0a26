// Last-write-wins request sequencing: each view keeps one of these so a
// slow stale response can never overwrite the result of a newer request.

export class LatestWins {
  private seq = 0;

  async run<T>(
    task: () => Promise<T>,
    apply: (result: T) => void,
    onError?: (error: unknown) => void,
  ): Promise<void> {
    const id = ++this.seq;
    try {
      const result = await task();
      if (id === this.seq) apply(result);
    } catch (error) {
      if (id === this.seq && onError) onError(error);
    }
  }
}
