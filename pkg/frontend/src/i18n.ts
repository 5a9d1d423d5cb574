// Interface strings. Both catalogs must cover the same keys (tested);
// linguistic content always comes from the backend, never from here.

export type Lang = "es" | "arn";

const es = {
  title: "Analizador de Mapuzugun",
  placeholder: "Escriba una palabra o frase…",
  analyze: "Analizar",
  empty_input: "Escriba algo antes de analizar.",
  detected: "Alfabeto detectado",
  conflict_note: "las palabras no coinciden en un solo alfabeto",
  choose_orthography: "No se pudo determinar el alfabeto; elija uno:",
  display_label: "Mostrar en",
  language_label: "Idioma",
  auto: "automático",
  conversions: "En los tres alfabetos",
  identical_badge: "idéntico en los tres alfabetos",
  lossy_badge: "conversión con pérdida",
  no_analysis: "Sin análisis: ninguna segmentación válida.",
  truncated: "lista truncada: hay más segmentaciones que el límite",
  alternatives: "segmentaciones",
  page: "página",
  prev: "anterior",
  next: "siguiente",
  error_prefix: "Error",
  tag_vi: "verbo intransitivo (no lleva objeto directo)",
  tag_vtr: "verbo transitivo (lleva objeto directo)",
  tag_n: "sustantivo",
  tag_adj: "adjetivo",
  tag_adv: "adverbio",
};

const arn: Record<keyof typeof es, string> = {
  title: "Mapuzugun azkintuwe",
  placeholder: "Wirige kiñe zugun kam kiñe wirin…",
  analyze: "Azkintuge",
  empty_input: "Wirige chem rume azkintuael.",
  detected: "Pepikan wirin azentun",
  conflict_note: "pu zugun welulkawigün kiñe wirin azentun mew",
  choose_orthography: "Pepi kimfalay chi wirin azentun; zullige kiñe:",
  display_label: "Pegelün",
  language_label: "Kewün",
  auto: "kisu zullin",
  conversions: "Küla wirin azentun mew",
  identical_badge: "ka femgechi kom wirin azentun mew",
  lossy_badge: "ñamkechi welukan",
  no_analysis: "Gelay chi azkintun: gelay kiñe küme wichulün.",
  truncated: "katrünagi chi rakin: zoy müley wichulün",
  alternatives: "wichulün",
  page: "pagina",
  prev: "wünelu",
  next: "inalelu",
  error_prefix: "Weluzugu",
  tag_vi: "verbo intransitivo (gelay ñi 'chem')",
  tag_vtr: "verbo transitivo (müley ñi 'chem')",
  tag_n: "üy zugun (sustantivo)",
  tag_adj: "azgelu zugun (adjetivo)",
  tag_adv: "chumgechi zugun (adverbio)",
};

export const STRINGS: Record<Lang, typeof es> = { es, arn };

export type StringKey = keyof typeof es;

export function t(lang: Lang, key: StringKey): string {
  return STRINGS[lang][key] ?? STRINGS.es[key];
}

export function tagTooltip(lang: Lang, tag: string): string | null {
  const key = `tag_${tag}` as StringKey;
  return key in STRINGS.es ? t(lang, key) : null;
}
