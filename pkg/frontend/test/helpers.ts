// fetch mocking for contract tests: route table keyed by "METHOD path-prefix".

import { vi } from "vitest";

export interface RouteLog {
  method: string;
  path: string;
  body: unknown;
}

export function mockFetch(
  routes: Record<string, unknown | ((log: RouteLog) => unknown)>,
): { log: RouteLog[] } {
  const log: RouteLog[] = [];
  vi.stubGlobal(
    "fetch",
    vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
      const url = String(input);
      const path = url.replace(/^https?:\/\/[^/]+/, "");
      const method = init?.method ?? "GET";
      const entry: RouteLog = {
        method,
        path,
        body: init?.body ? JSON.parse(String(init.body)) : undefined,
      };
      log.push(entry);
      for (const [key, responder] of Object.entries(routes)) {
        const [routeMethod, routePath] = key.split(" ", 2);
        if (method === routeMethod && path.startsWith(routePath!)) {
          const value =
            typeof responder === "function" ? (responder as (l: RouteLog) => unknown)(entry) : responder;
          if (value instanceof Response) return value;
          return jsonResponse(value);
        }
      }
      return jsonResponse({ kind: "http-error", message: `no route for ${method} ${path}` }, 404);
    }),
  );
  return { log };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export function failingFetch(): void {
  vi.stubGlobal(
    "fetch",
    vi.fn(async () => {
      throw new TypeError("NetworkError: connection refused");
    }),
  );
}

export function text(root: ParentNode, selector: string): string {
  const node = root.querySelector(selector);
  if (!node) throw new Error(`no element matches ${selector}`);
  return node.textContent ?? "";
}
