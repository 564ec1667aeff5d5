/**
 * Line protocol: newline-delimited JSON requests on stdin, one JSON response
 * per request on stdout, in request order. A request looks like
 *
 *   {"id": 1, "op": "correct", "text": "...", "uncertain": [[s, e], ...]}
 *
 * and the response carries the same id plus the (possibly rewritten) text.
 * Span offsets count Unicode code points, half-open. Malformed lines never
 * crash the server: they produce a response with the original id when one can
 * be parsed out, null otherwise, and the text unchanged.
 *
 * Beyond "correct", the server answers {"op": "score", "text": ...} with the
 * model's mean log probability in a "score" field, so a supervising process
 * can check that both sides of the pipe score text identically.
 */
import { createInterface } from 'node:readline';

import { CharNGramModel } from './model.js';
import { fillUncertain, Span } from './fill.js';

export type Mode = 'echo' | 'ngram-fill';

export interface CorrectorResponse {
  id: unknown;
  text: string;
  score?: number;
}

function parseSpans(raw: unknown): Span[] {
  if (!Array.isArray(raw)) {
    return [];
  }
  const spans: Span[] = [];
  for (const entry of raw) {
    if (Array.isArray(entry) && entry.length === 2 &&
        Number.isInteger(entry[0]) && Number.isInteger(entry[1])) {
      spans.push([entry[0], entry[1]]);
    }
  }
  return spans;
}

/** Turn one request line into one response object. Never throws. */
export function handleLine(line: string, mode: Mode, model: CharNGramModel | null): CorrectorResponse {
  let request: unknown;
  try {
    request = JSON.parse(line);
  } catch {
    return { id: null, text: '' };
  }
  if (typeof request !== 'object' || request === null || Array.isArray(request)) {
    return { id: null, text: '' };
  }
  const fields = request as Record<string, unknown>;
  const id = 'id' in fields ? fields.id : null;
  const text = typeof fields.text === 'string' ? fields.text : '';
  if (fields.op === 'score' && model !== null) {
    return { id, text, score: model.score(text) };
  }
  if (fields.op !== 'correct') {
    return { id, text };
  }
  const spans = parseSpans(fields.uncertain);
  if (mode === 'ngram-fill' && model !== null && spans.length > 0) {
    try {
      return { id, text: fillUncertain(model, text, spans) };
    } catch {
      return { id, text };
    }
  }
  return { id, text };
}

/** Serve requests from stdin until EOF. Blank lines are ignored. */
export async function serveStdio(mode: Mode, model: CharNGramModel | null): Promise<void> {
  const rl = createInterface({ input: process.stdin, terminal: false });
  for await (const line of rl) {
    if (line.trim() === '') {
      continue;
    }
    process.stdout.write(`${JSON.stringify(handleLine(line, mode, model))}\n`);
  }
}
