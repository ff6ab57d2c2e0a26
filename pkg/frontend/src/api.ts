// Typed fetch client for the service. Validation failures surface the
// service's {kind, message} body; transport failures become "unreachable"
// so views can show the offline banner instead of stale data.

import type {
  ForecastIn,
  ForecastOut,
  HealthOut,
  RecordOut,
  RecordsOut,
  ReliabilityOut,
  SweepOut,
  SystemOut,
  VariantsOut,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly kind: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export class UnreachableError extends Error {
  constructor(cause: unknown) {
    super(`service unreachable: ${cause instanceof Error ? cause.message : cause}`);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(path, init);
  } catch (cause) {
    throw new UnreachableError(cause);
  }
  if (!response.ok) {
    let kind = "http-error";
    let message = `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { kind?: string; message?: string };
      if (body.kind) kind = body.kind;
      if (body.message) message = body.message;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(kind, message, response.status);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  getHealth(): Promise<HealthOut> {
    return request(this.url("/api/health"));
  }

  getSystem(): Promise<SystemOut> {
    return request(this.url("/api/system"));
  }

  getReliability(): Promise<ReliabilityOut> {
    return request(this.url("/api/reliability"));
  }

  getVariants(fraction: number): Promise<VariantsOut> {
    return request(this.url(`/api/variants?fraction=${fraction}`));
  }

  postForecast(body: ForecastIn): Promise<ForecastOut> {
    return request(this.url("/api/forecast"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  getSweep(values: number[], tolerance?: number): Promise<SweepOut> {
    const params = new URLSearchParams({
      parameter: "tank",
      values: values.join(","),
    });
    if (tolerance !== undefined) params.set("tolerance", String(tolerance));
    return request(this.url(`/api/sweep?${params}`));
  }

  getRecords(): Promise<RecordsOut> {
    return request(this.url("/api/records"));
  }

  postRecord(record: RecordOut): Promise<RecordOut> {
    return request(this.url("/api/records"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(record),
    });
  }
}
