/** Matched-term highlighting over head text.
 *
 * A matched term like "fundamental_rights" contributes its two words;
 * every occurrence of such a word in the head is marked,
 * case-insensitively, on whole-word boundaries (hyphens and apostrophes
 * count as word-internal, so "plaintiff" never lights up inside
 * "plaintiff-respondent").
 */

export interface Segment {
  text: string;
  marked: boolean;
}

const HTML_ESCAPES: Record<string, string> = {
  "&": "&amp;",
  "<": "&lt;",
  ">": "&gt;",
  '"': "&quot;",
  "'": "&#39;",
};

export function escapeHtml(text: string): string {
  return text.replace(/[&<>"']/g, (ch) => HTML_ESCAPES[ch]);
}

/** Distinct lowercased words of the given term keys, longest first. */
export function termWords(termKeys: string[]): string[] {
  const words = new Set<string>();
  for (const key of termKeys) {
    for (const word of key.split("_")) {
      if (word) words.add(word.toLowerCase());
    }
  }
  return [...words].sort((a, b) => b.length - a.length || a.localeCompare(b));
}

function escapeRegExp(text: string): string {
  return text.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}

export function highlightSegments(head: string, termKeys: string[]): Segment[] {
  if (!head) return [];
  const words = termWords(termKeys);
  if (words.length === 0) return [{ text: head, marked: false }];

  const boundary = "[\\w'-]";
  const pattern = new RegExp(
    `(?<!${boundary})(?:${words.map(escapeRegExp).join("|")})(?!${boundary})`,
    "gi",
  );
  const segments: Segment[] = [];
  let cursor = 0;
  for (const match of head.matchAll(pattern)) {
    const start = match.index ?? 0;
    if (start > cursor) segments.push({ text: head.slice(cursor, start), marked: false });
    segments.push({ text: match[0], marked: true });
    cursor = start + match[0].length;
  }
  if (cursor < head.length) segments.push({ text: head.slice(cursor), marked: false });
  return segments;
}
