window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#how-the-guide-is-organized","introduction.html#a-thirty-second-tour","weyl-arithmetic.html#weyl-algebra-arithmetic","weyl-arithmetic.html#standard-monomials-and-normal-form","weyl-arithmetic.html#degrees","weyl-arithmetic.html#endomorphisms","positive-characteristic.html#the-center-in-characteristic-p","positive-characteristic.html#deciding-centrality-changing-coordinates","positive-characteristic.html#restriction-of-endomorphisms","positive-characteristic.html#the-q-p-basis-over-the-center","groebner-bases.html#polynomials-and-groebner-bases","groebner-bases.html#term-orders","groebner-bases.html#the-buchberger-engine","groebner-bases.html#the-degree-audit","integrality-and-inversion.html#integrality-and-inversion","integrality-and-inversion.html#minimal-polynomials-by-elimination","integrality-and-inversion.html#integrality-certificates","integrality-and-inversion.html#inverting-automorphisms","integrality-and-inversion.html#the-inverse-degree-bounds","generation.html#module-generation-certificates","generation.html#searching-for-certificates","generation.html#worked-examples","probe.html#the-reduction-probe","probe.html#the-standing-counterexample","probe.html#determinism","cli-reference.html#command-line-reference","cli-reference.html#expression-grammar","cli-reference.html#endomorphism-files","cli-reference.html#subcommands","cli-reference.html#budgets","cli-reference.html#report-formats"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.4142135623730951},"26":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":8,"0":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":3}}},"1":{"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":3.1622776601683795},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"26":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772}},"df":17,"/":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1}}},"2":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":2.8284271247461903},"22":{"tf":2.0},"23":{"tf":1.4142135623730951},"24":{"tf":2.23606797749979},"26":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"0":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"^":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{"28":{"tf":1.0}},"df":1}},"n":{"docs":{"17":{"tf":1.0}},"df":1}},"n":{"docs":{"19":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3},"x":{"docs":{"22":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"3":{"docs":{"10":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":3,"*":{"docs":{},"df":0,"x":{"docs":{},"df":0,"1":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{},"df":0,"*":{"docs":{},"df":0,"d":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"28":{"tf":1.0}},"df":1}}}}}},"4":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":4,"*":{"docs":{},"df":0,"x":{"docs":{},"df":0,"1":{"docs":{},"df":0,"*":{"docs":{},"df":0,"d":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"8":{"docs":{"2":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"5":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.0}},"df":4,"*":{"docs":{},"df":0,"x":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1}}},",":{"docs":{},"df":0,"7":{"docs":{"2":{"tf":1.0}},"df":1}},"0":{"docs":{"21":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"7":{"docs":{"23":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}},"n":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"u":{"docs":{},"df":0,"v":{"docs":{"6":{"tf":1.0}},"df":1}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}},"v":{"docs":{"19":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"b":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":9}}}},"t":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"10":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.4142135623730951},"28":{"tf":1.0},"4":{"tf":1.0}},"df":8}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":10}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1},"z":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.4142135623730951},"26":{"tf":1.0},"30":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0},"29":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":4}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}}},"k":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0}},"df":2,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"y":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"y":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"y":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"29":{"tf":2.23606797749979}},"df":6}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"19":{"tf":2.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}}}}}},"’":{"docs":{"21":{"tf":1.0}},"df":1}},"b":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}},"df":4,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.0}},"df":3},"i":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":11}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0}},"df":3}}}}}},"e":{"docs":{"23":{"tf":1.4142135623730951}},"df":1,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"24":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"7":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"10":{"tf":1.0},"28":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"28":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{},"df":0,"/":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}},"df":8},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"14":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.0}},"df":6}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"9":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":5}}}},"g":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"25":{"tf":1.4142135623730951},"31":{"tf":1.0}},"df":3}}},"’":{"docs":{"21":{"tf":1.0}},"df":1}},"c":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,",":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,",":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"27":{"tf":1.0}},"df":3}}},"p":{"docs":{"13":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.7320508075688772},"29":{"tf":2.6457513110645907},"7":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":11,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"29":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":5,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"29":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.7320508075688772}},"df":6,"i":{"docs":{"0":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"’":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"r":{"docs":{"28":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"28":{"tf":1.0}},"df":5},"2":{"docs":{"28":{"tf":1.0}},"df":1},"5":{"docs":{"28":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":10,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1},"r":{"docs":{"16":{"tf":1.0}},"df":1}}},"i":{"docs":{"6":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"27":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":8}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":5}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":13}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"12":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"s":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":11}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"23":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"29":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5,"’":{"docs":{"1":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"x":{"docs":{"4":{"tf":2.0}},"df":1}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"2":{"tf":1.0},"21":{"tf":2.0},"22":{"tf":2.449489742783178},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":6,"=":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0}},"df":2},"4":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"d":{"docs":{"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":2.6457513110645907},"23":{"tf":1.0},"24":{"tf":1.7320508075688772},"27":{"tf":1.0},"4":{"tf":2.6457513110645907},"6":{"tf":1.4142135623730951},"9":{"tf":2.449489742783178}},"df":10,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"1":{"docs":{"2":{"tf":1.7320508075688772},"22":{"tf":1.0},"28":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":4,"*":{"docs":{},"df":0,"x":{"docs":{},"df":0,"1":{"docs":{"27":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1},"n":{"docs":{"17":{"tf":1.0}},"df":1}},"2":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}},"b":{"docs":{"4":{"tf":1.0}},"df":1},"n":{"docs":{"17":{"tf":1.4142135623730951}},"df":1},"p":{"docs":{"9":{"tf":1.0}},"df":1},"v":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"_":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2,"^":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"j":{"docs":{"0":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":3}}}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"g":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1,"b":{"docs":{"5":{"tf":1.0}},"df":1}},"b":{"docs":{"5":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"29":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":2}},"n":{"docs":{"29":{"tf":1.0}},"df":1}}},"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":2.23606797749979},"21":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":2.23606797749979},"29":{"tf":1.7320508075688772},"5":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":13,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0},"24":{"tf":1.0},"31":{"tf":1.4142135623730951}},"df":3}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}},"v":{"docs":{"23":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"s":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{"6":{"tf":1.4142135623730951}},"df":1},"p":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0},"4":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"20":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"8":{"tf":1.0}},"df":2},"s":{"docs":{"8":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.4142135623730951}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"e":{"docs":{"29":{"tf":3.605551275463989}},"df":1,".":{"docs":{},"df":0,"g":{"docs":{"31":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"17":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":5}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"17":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}},"df":7,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":6}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0},"31":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}},"d":{"docs":{"17":{"tf":1.0}},"df":1,"o":{"docs":{"6":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":2.23606797749979},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.7320508075688772},"29":{"tf":1.0},"6":{"tf":2.23606797749979},"9":{"tf":1.4142135623730951}},"df":11}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":4},"t":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":3}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0}},"df":3}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"26":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":3}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":4,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"y":{"docs":{"31":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"20":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":2}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"27":{"tf":1.0},"29":{"tf":1.0}},"df":7,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":11}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0},"30":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{"26":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"q":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{"10":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}},"r":{"docs":{"27":{"tf":1.0},"29":{"tf":2.23606797749979}},"df":2,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"27":{"tf":1.0},"29":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"f":{"docs":{"16":{"tf":2.449489742783178},"29":{"tf":3.872983346207417},"9":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"5":{"docs":{"9":{"tf":1.7320508075688772}},"df":1},"_":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.7320508075688772},"18":{"tf":1.0}},"df":2},"2":{"docs":{"22":{"tf":1.0},"4":{"tf":1.0}},"df":2,"[":{"docs":{},"df":0,"x":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{"17":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"16":{"tf":2.0}},"df":1},"n":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2},"p":{"docs":{"24":{"tf":1.0}},"df":1,"[":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"^":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"^":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1},"t":{"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2}}}},"l":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772},"24":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":4.242640687119285},"6":{"tf":1.0}},"df":6},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"d":{"docs":{},"df":0,"3":{"docs":{},"df":0,"7":{"docs":{},"df":0,"f":{"docs":{},"df":0,"3":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"c":{"docs":{},"df":0,"0":{"docs":{},"df":0,"b":{"docs":{},"df":0,"9":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"8":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"8":{"docs":{},"df":0,"6":{"docs":{},"df":0,"1":{"docs":{},"df":0,"a":{"docs":{},"df":0,"6":{"docs":{},"df":0,"8":{"docs":{},"df":0,"e":{"docs":{},"df":0,"7":{"docs":{},"df":0,"2":{"docs":{},"df":0,"e":{"docs":{},"df":0,"3":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{},"df":0,"0":{"docs":{"2":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":2.23606797749979}},"df":6,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"y":{"docs":{"31":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"21":{"tf":1.0},"29":{"tf":1.0}},"df":4}}},"x":{"docs":{"20":{"tf":1.0},"31":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.0},"26":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1},"m":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1},"t":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"31":{"tf":1.4142135623730951}},"df":3}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0}},"df":7}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0},"29":{"tf":1.0}},"df":2,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"g":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":2.0},"29":{"tf":1.4142135623730951}},"df":4,"1":{"docs":{"22":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":2.0}},"df":1},"2":{"docs":{"20":{"tf":1.0}},"df":1},"i":{"docs":{"18":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}},"j":{"docs":{"20":{"tf":1.7320508075688772},"21":{"tf":1.0}},"df":2},"m":{"docs":{"20":{"tf":2.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"=":{"docs":{},"df":0,"2":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}}}}}},"b":{"docs":{"13":{"tf":1.0},"29":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772},"29":{"tf":2.23606797749979}},"df":4,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":16,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"27":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}}},"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"31":{"tf":1.0}},"df":3}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"14":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":3,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"31":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":3}},"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":7}}}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"28":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":2.0}},"df":12}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"26":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}},"x":{"docs":{"13":{"tf":1.0},"29":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"3":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.4142135623730951},"23":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":4}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{"14":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"2":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"29":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":7,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"2":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":2.0},"24":{"tf":2.0},"29":{"tf":1.4142135623730951}},"df":6,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"y":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.0}},"df":3},"l":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"23":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}}}},"j":{"docs":{"20":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":2.0}},"df":3}}}}}}}},"k":{"docs":{"29":{"tf":1.4142135623730951},"4":{"tf":2.0}},"df":2,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}},"x":{"docs":{"16":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"y":{"docs":{"31":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":2.23606797749979},"16":{"tf":1.0}},"df":2}},"f":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":3,"|":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"27":{"tf":1.0}},"df":5,"|":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"|":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,":":{"docs":{},"df":0,"k":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"h":{"docs":{"2":{"tf":1.0},"29":{"tf":1.7320508075688772}},"df":2},"i":{"docs":{"16":{"tf":1.0}},"df":1,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"=":{"docs":{},"df":0,"2":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.4142135623730951},"31":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":7,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"21":{"tf":1.7320508075688772},"23":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"23":{"tf":1.0}},"df":3}},"v":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"28":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0},"4":{"tf":1.0}},"df":2},"s":{"docs":{"14":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}},"m":{"docs":{},"df":0,"=":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5}},"k":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.7320508075688772},"4":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":6},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}},"x":{"docs":{"2":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"3":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"30":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":5}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":4,"u":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"7":{"tf":1.0}},"df":5}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.7320508075688772},"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":4}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"v":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}},"df":3,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"29":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0}},"df":4,"=":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.4142135623730951},"31":{"tf":1.0}},"df":5},"2":{"docs":{"16":{"tf":1.0},"28":{"tf":1.0}},"df":2},"3":{"docs":{"13":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":2.23606797749979}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0},"27":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"g":{"docs":{"26":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{"17":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"df":3,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":7}}}},"t":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"c":{"docs":{"23":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}},"n":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"28":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.0}},"df":9,"c":{"docs":{"24":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1},"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":2.0},"16":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"31":{"tf":1.0}},"df":8,"=":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":13,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}}}}},"p":{"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":2.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":11,",":{"docs":{},"df":0,"q":{"docs":{"29":{"tf":1.4142135623730951}},"df":1}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}},"b":{"docs":{"10":{"tf":1.0},"29":{"tf":1.0}},"df":2},"v":{"docs":{"6":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"30":{"tf":1.0},"4":{"tf":2.0}},"df":4}},"r":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"d":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2},"t":{"docs":{"4":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{"0":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"4":{"tf":1.0}},"df":8}},"h":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":7,"(":{"docs":{"20":{"tf":1.0}},"df":1,"a":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":1.0}},"df":1},"m":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"b":{"docs":{"17":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":1.0}},"df":1},"m":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"10":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}},"x":{"docs":{"10":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"22":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0}},"df":1}},"n":{"docs":{"24":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0},"27":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},"u":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"29":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"28":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":2.0},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":2.23606797749979},"17":{"tf":2.0},"19":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":4}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":2.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":2.6457513110645907},"24":{"tf":2.449489742783178},"25":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":2.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":10,"=":{"docs":{},"df":0,"5":{"docs":{"31":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"29":{"tf":1.0},"31":{"tf":1.0}},"df":6,"’":{"docs":{"24":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.0}},"df":4,"t":{"docs":{"29":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2}}}},"o":{"docs":{},"df":0,"f":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1,"t":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2}},"i":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}},"q":{"docs":{"10":{"tf":1.0},"18":{"tf":1.7320508075688772},"23":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":4,"^":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0},"29":{"tf":1.0}},"df":2},"u":{"docs":{"6":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}},"p":{"docs":{"29":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}},"r":{"docs":{"29":{"tf":2.6457513110645907}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4}}},"k":{"docs":{"22":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":8}}}}},"e":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"22":{"tf":1.0}},"df":2},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"31":{"tf":1.4142135623730951}},"df":4}},"v":{"docs":{"10":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0}},"df":9,"t":{"docs":{"0":{"tf":1.0},"23":{"tf":1.7320508075688772}},"df":2}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}},"l":{"docs":{"24":{"tf":1.0},"9":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"28":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":8,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"=":{"docs":{},"df":0,"y":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0},"31":{"tf":1.4142135623730951}},"df":2}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":7,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"26":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"19":{"tf":1.0},"23":{"tf":2.0},"24":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"9":{"tf":2.0}},"df":7,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"h":{"docs":{"2":{"tf":1.0},"29":{"tf":1.7320508075688772}},"df":2},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.7320508075688772},"29":{"tf":3.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":10,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}},"t":{"docs":{"8":{"tf":1.0}},"df":1}},"w":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"30":{"tf":1.0}},"df":8,"a":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{"20":{"tf":2.449489742783178},"30":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":6},"p":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":7}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":3}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}},"e":{"docs":{"10":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},"t":{"docs":{"20":{"tf":1.0}},"df":1,"t":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"24":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772}},"df":2}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"w":{"docs":{"1":{"tf":1.0}},"df":1,"n":{"docs":{"31":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.0}},"df":1,"=":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":2.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}},"u":{"docs":{"26":{"tf":1.0},"30":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"=":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"31":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{"10":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{"25":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6}},"m":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"13":{"tf":1.4142135623730951},"16":{"tf":2.23606797749979},"17":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":5,"*":{"docs":{},"df":0,"t":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"2":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2},"^":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2},"3":{"docs":{"13":{"tf":1.0}},"df":1},"p":{"docs":{"24":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2},"m":{"docs":{"16":{"tf":1.4142135623730951}},"df":1},"n":{"docs":{"18":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}},"g":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0}},"df":2},"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"24":{"tf":1.7320508075688772}},"df":2}},"m":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"13":{"tf":2.0},"16":{"tf":1.0},"27":{"tf":2.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0}},"df":10}},"x":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"31":{"tf":1.0}},"df":2,"|":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}},"h":{"docs":{"0":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}}}}}}},"i":{"docs":{"13":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"p":{"docs":{"1":{"tf":1.0},"23":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"29":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"29":{"tf":1.0}},"df":3}}}}}}}}}},"i":{"docs":{"23":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}},"p":{"docs":{"27":{"tf":1.0}},"df":1,"l":{"docs":{"12":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":2}},"r":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"o":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0}},"df":10}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}}},"u":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":2}},"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{"4":{"tf":1.0}},"df":1,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"12":{"tf":1.0},"18":{"tf":1.7320508075688772},"2":{"tf":1.0},"23":{"tf":2.0},"27":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"9":{"tf":1.7320508075688772}},"df":8,"a":{"docs":{},"df":0,"g":{"docs":{"26":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"v":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}},"df":4}},"u":{"docs":{"6":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"r":{"docs":{"27":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"29":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":11}},"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"27":{"tf":2.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"26":{"tf":1.4142135623730951},"29":{"tf":1.7320508075688772}},"df":7}}}},"i":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2,"f":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"29":{"tf":1.0},"8":{"tf":1.0}},"df":7},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"20":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}},"y":{"docs":{"19":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":10,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"=":{"docs":{},"df":0,"2":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.0}},"df":12,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"{":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"30":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.0}},"df":3,"=":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{"24":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"22":{"tf":2.6457513110645907},"23":{"tf":1.0},"24":{"tf":2.449489742783178},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":2.6457513110645907},"9":{"tf":2.449489742783178}},"df":11,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"1":{"docs":{"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"22":{"tf":1.0},"28":{"tf":2.449489742783178},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":7,"*":{"docs":{},"df":0,"d":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}},"x":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2},"3":{"docs":{"13":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.7320508075688772}},"df":1}}}},"^":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"28":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":5,"*":{"docs":{},"df":0,"d":{"docs":{},"df":0,"1":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{"13":{"tf":1.0}},"df":1}}},"2":{"docs":{"13":{"tf":1.4142135623730951},"16":{"tf":1.0},"28":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4,"^":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1},"3":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}},"3":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,"^":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1},"p":{"docs":{"24":{"tf":1.0}},"df":1}},"2":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":2.23606797749979},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":2.23606797749979}},"df":6},"5":{"docs":{"9":{"tf":1.0}},"df":1},"c":{"docs":{"4":{"tf":1.0}},"df":1},"p":{"docs":{"24":{"tf":2.0}},"df":1},"u":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"_":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":6,"^":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"j":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2,"^":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}}}},"y":{"docs":{"17":{"tf":1.0}},"df":1}},"y":{"docs":{"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"27":{"tf":1.0},"29":{"tf":1.0},"9":{"tf":2.23606797749979}},"df":6,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"x":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"1":{"docs":{"28":{"tf":1.4142135623730951}},"df":1,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{"2":{"tf":2.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772}},"df":4},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0}},"df":6}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":4},"i":{"docs":{"10":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":4}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}},"df":6}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"28":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"28":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{"31":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":4}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951}},"df":5},"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}},"df":6}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}},"p":{"docs":{"10":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0}},"df":5}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}},"q":{"docs":{"10":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}},"df":6}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"31":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1},"i":{"docs":{"10":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"28":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"28":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{"31":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0}},"df":2},"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}},"p":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"q":{"docs":{"10":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"31":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"21":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"weylforge is an exact computer-algebra library and command-line tool for\\na specific circle of questions about the Weyl algebra — the algebra of\\npolynomial differential operators — and about polynomial endomorphisms of\\naffine space. The n-th Weyl algebra A_n is generated by x_1, .., x_n and d_1, .., d_n subject to [x_i, x_j] = 0, [d_i, d_j] = 0, [d_i, x_j] = delta_ij . Over a field of characteristic zero this algebra is simple, and a famous\\nopen question asks whether every endomorphism of it is an automorphism.\\nNobody knows. What can be done, exactly and by machine, is: compute in A_n in normal form, with arbitrary-precision rational or\\nprime-field coefficients, and check whether candidate generator images\\nreally satisfy the defining relations; in characteristic p, exploit the large center C = F_p[x_i^p, d_i^p]:\\ndecide centrality, change coordinates between central elements and\\nordinary polynomials, expand arbitrary elements over the center, and\\nrestrict endomorphisms to the center; analyze the resulting commutative polynomial endomorphisms with\\nGroebner bases: invert them when they are automorphisms, certify when\\nthey are integral (finite), and audit all of it against proven degree\\nbounds; run the whole battery prime by prime on a rational endomorphism — the reduction probe — and record per-prime verdicts: relations preserved,\\nrestriction étale, restriction finite, restriction invertible, inverse\\nlifted back to the Weyl algebra. Every computation is exact. There is no floating point anywhere, all maps\\niterate in a canonical order, and identical invocations produce\\nbyte-identical reports.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"The chapters follow the layers of the library, bottom to top. Each one\\nexplains the objects, shows runnable Rust snippets (these are copies of\\nthe crate’s doc-tests, so cargo test --doc keeps the guide honest), and\\npoints at the command-line equivalents where they exist.","breadcrumbs":"Introduction » How the guide is organized","id":"1","title":"How the guide is organized"},"10":{"body":"More is true: not just the x^u d^v but the images Q = phi(x), P = phi(d) of any relation-satisfying tuple give a basis { Q^a P^b : 0 <= a, b <= p-1 } of the algebra as a C-module. expand_qp_basis computes the\\ncoordinates of an element in this basis by peeling slots in decreasing\\ndegree order with commutator (“ad”) operators: ad(P_i) lowers the Q_i-exponent and ad(Q_i) lowers the P_i-exponent, with invertible\\nfactorial denominators because all exponents stay below p. The\\nexpansion is verified on the spot — the residual after subtracting every\\nrecovered slot must vanish — and the test suite checks it against a dense\\nlinear-solve oracle slot by slot. Centrality is also what the twisted centralizer sees: for any\\nendomorphism phi, an element commutes with all of phi(x_i), phi(d_i)\\nexactly when it is central. That equivalence, checked on random elements\\nfor p in {2, 3, 5}, is the concrete, executable face of the statement\\nthat the algebra is as noncommutative over its center as it can be.","breadcrumbs":"The center in characteristic p » The Q-P basis over the center","id":"10","title":"The Q-P basis over the center"},"11":{"body":"The commutative layer is deliberately ordinary: sparse polynomials over\\nthe same exact coefficient fields, endomorphisms as variable images,\\nformal partial derivatives, Jacobians. Its one opinionated piece is the\\nGroebner engine.","breadcrumbs":"Polynomials and Groebner bases » Polynomials and Groebner bases","id":"11","title":"Polynomials and Groebner bases"},"12":{"body":"A term order is a total order on monomials compatible with multiplication\\nand with 1 at the bottom. Three families are provided: lex with a variable priority list — the elimination workhorse; grevlex — what you use when you just want a small basis; block orders — two grevlex blocks, the first strictly dominating,\\nwhich is the general form of an elimination order. The property tests sample random monomial triples and check totality,\\nantisymmetry, multiplicativity and minimality of 1 for all three.","breadcrumbs":"Polynomials and Groebner bases » Term orders","id":"12","title":"Term orders"},"13":{"body":"buchberger computes the reduced basis: leading terms minimally\\ngenerate the leading-term ideal, every generator is fully reduced against\\nthe others, all leading coefficients are 1, and the list is sorted by\\nleading term. Reduced bases are canonical — recomputing, in any\\nconfiguration, reproduces the identical generator list, and the\\ndeterminism acceptance criterion holds the engine to that. Pair selection is the normal strategy (smallest lcm degree first, ties by\\nindex), pruned by the coprime and chain criteria. Two budgets guard\\nagainst runaway instances: a pair-count budget (default 200 000,\\noverridable with WEYLFORGE_PAIR_BUDGET) and an intermediate-degree cap.\\nExhausting either is a reported error — the verdict becomes\\n“inconclusive”, never silently wrong. $ weylforge gb --ring \\"poly n=3 char=0\\" --gen \\"x2 - x1^2\\" --gen \\"x3 - x1^3\\"\\norder=lex\\ninput_degree=3\\nmax_degree=3\\nx2^3 - x3^2\\nx1*x3 - x2^2\\nx1*x2 - x3\\nx1^2 - x2 Generators are listed by ascending leading term, so the x1-free\\neliminant comes first: the twisted cubic t -> (t, t^2, t^3) satisfies x2^3 = x3^2.","breadcrumbs":"Polynomials and Groebner bases » The Buchberger engine","id":"13","title":"The Buchberger engine"},"14":{"body":"For an ideal generated in degree at most d in n variables, the\\nreduced basis degree is bounded by 2 (d^2/2 + d)^(2^(n-1)) . The bound is doubly exponential and usually very loose, but it is a theorem, which makes it a free engine test: gb_degree_audit compares\\nevery computed basis against it, the engine runs the audit on every basis\\nit returns, and a violation fails the computation (and the build) as an\\ninternal bug rather than a data point. The bound is a half-integer when d is odd and n > 1, so the comparison is done in exact rational\\narithmetic.","breadcrumbs":"Polynomials and Groebner bases » The degree audit","id":"14","title":"The degree audit"},"15":{"body":"Both analyses in this chapter answer questions about the subalgebra A = K[f_1, .., f_n] generated by the images of a polynomial\\nendomorphism, and both run on the same elimination pattern: adjoin tag\\nvariables, compute a lex basis with the original variables largest, read\\nthe answer off the part of the basis free of original variables.","breadcrumbs":"Integrality and inversion » Integrality and inversion","id":"15","title":"Integrality and inversion"},"16":{"body":"For a polynomial f and basis polynomials f_1, .., f_m, the ideal I = (t - f, t_1 - f_1, .., t_m - f_m) in K[x.., t, t..] encodes every polynomial identity satisfied by (f, f_1, .., f_m): a polynomial in the tag variables vanishes under the\\nsubstitution exactly when it lies in I. Under the lex order with x_1 > .. > x_n > t > t_1 > .. > t_m, the x-free part of the reduced\\nbasis generates the elimination ideal, and the x-free generator involving t with the smallest leading term is the minimal polynomial of f over K(f_1, .., f_m), cleared of denominators. No qualifying generator means f is transcendental. $ weylforge minpoly --ring \\"poly n=2 char=0\\" --f \\"x1\\" --gen \\"x1 + x2\\" --gen \\"x1*x2\\"\\nt^2 - t*t1 + t2 — the familiar fact that a root of a quadratic is determined by the\\nelementary symmetric functions.","breadcrumbs":"Integrality and inversion » Minimal polynomials by elimination","id":"16","title":"Minimal polynomials by elimination"},"17":{"body":"The endomorphism phi is integral (equivalently: finite — the ring is\\na finitely generated module over the image) exactly when each variable x_i satisfies a monic polynomial over A. The test computes the\\nminimal polynomial of each x_i over the images and checks monicity in t; a non-monic minimal polynomial (the shear (x, xy) produces t*t1 - t2 for y) or a transcendental variable (which forces the\\nimages to be algebraically dependent) ends the story with a reported\\nreason. On success the certificate carries, for every coefficient of every F_i, both the coefficient as an element of A and its preimage — the\\npolynomial b with phi(b) equal to the coefficient — plus two audited\\ndegree bounds, with d = deg(phi): deg_T(F_i) <= d^n, and every preimage has degree at most 2^n d^(n-1) (n + d^n). Both bounds are theorems; the acceptance suite runs a corpus of integral\\nmaps and requires zero violations. The certificate is also verified\\ndirectly: F_i(x_i) must expand to exactly zero.","breadcrumbs":"Integrality and inversion » Integrality certificates","id":"17","title":"Integrality certificates"},"18":{"body":"Whether phi is an automorphism — and what its inverse is — falls out of\\nthe same elimination: in the reduced lex basis of (t_1 - f_1, .., t_n - f_n) with the x block largest, phi is an\\nautomorphism exactly when every x_i appears as a generator x_i - g_i(t), and then psi(x_i) = g_i is the inverse. Both\\ncompositions are verified by substitution before the inverse is\\nreturned. #![allow(unused)] fn main() { extern crate weylforge;\\nuse weylforge::commpoly::{Poly, PolyEndo};\\nuse weylforge::groebner::{invert_poly_endo, GbConfig, InversionOutcome};\\nuse weylforge::scalars::FieldCtx; let q = FieldCtx::Rationals;\\nlet x = Poly::var(2, q, 0);\\nlet y = Poly::var(2, q, 1);\\n// the triangular automorphism (x, y + x^2)\\nlet phi = PolyEndo::new(vec![x.clone(), y.add(&x.pow(2).unwrap()).unwrap()]).unwrap();\\nlet InversionOutcome::Automorphism(psi) = invert_poly_endo(&phi, &GbConfig::default()).unwrap()\\nelse { unreachable!()\\n};\\nassert_eq!(psi.img()[1], y.sub(&x.pow(2).unwrap()).unwrap()); }","breadcrumbs":"Integrality and inversion » Inverting automorphisms","id":"18","title":"Inverting automorphisms"},"19":{"body":"Successful inversions are audited against the classical bound deg(phi^(-1)) <= deg(phi)^(n-1) and the triangular pair above attains it with equality ( 2 <= 2). The\\nacceptance corpus runs twenty-plus tame automorphisms in two and three\\nvariables with zero violations. For automorphisms of the Weyl algebra the same statement holds with\\nexponent 2n - 1: restriction to the center turns a Weyl automorphism in n variable pairs into a polynomial automorphism in 2n variables of\\nthe same degree, and the commutative bound applies there. verify_weyl_inverse_bound checks a claimed inverse pair by composing\\nboth ways and then audits that exponent.","breadcrumbs":"Integrality and inversion » The inverse-degree bounds","id":"19","title":"The inverse-degree bounds"},"2":{"body":"$ weylforge mul --lhs \\"d1\\" --rhs \\"x1\\"\\nx1*d1 + 1 $ weylforge probe --file shift.endo --primes 5,7 --cutoff 2\\nprobe fingerprint=df861a68e72e3170 n=1 degree=2 lift-cutoff=2\\n== prime 5 relations yes reduced degree 2 etale yes (asserted: p > 2 deg) finite yes (monic certificate: max T-degree 1 <= 4, max preimage degree 2 <= 48) invertible yes (center inverse degree 2 <= 2; the reduced endomorphism is an isomorphism) weyl inverse found, degree 2 <= 2\\n... where shift.endo is the two-line description of the automorphism x -> x, d -> d + x^2: ring weyl n=1 char=0\\nx1 -> x1\\nd1 -> x1^2 + d1 This file and the other endomorphisms used throughout the guide live in book/examples/.","breadcrumbs":"Introduction » A thirty-second tour","id":"2","title":"A thirty-second tour"},"20":{"body":"Fix an endomorphism phi with image subalgebra S = phi(A), and view\\nthe Weyl algebra as a left S-module: s acts on a as phi(s) a. When\\ndoes a finite set G = {g_1 = 1, g_2, .., g_m} generate the whole\\nalgebra as an S-module? There is a pleasantly finite criterion. Because the g_j include 1,\\nit suffices to be able to absorb one generator at a time: if for all i, j there are elements a_ijl, b_ijl with g_j x_i = phi(a_ij1) g_1 + .. + phi(a_ijm) g_m\\ng_j d_i = phi(b_ij1) g_1 + .. + phi(b_ijm) g_m then every standard monomial — hence everything — lands in S g_1 + .. + S g_m, by induction on the monomial. The displayed\\nequations are therefore a certificate of generation, checkable by pure\\nnormal-form arithmetic. generation_verify does exactly that check; a\\ncertificate that passes is a proof.","breadcrumbs":"Module generation certificates » Module generation certificates","id":"20","title":"Module generation certificates"},"21":{"body":"generation_solve looks for the a’s and b’s with support bounded by\\na degree cutoff. Each equation is linear in the unknown coefficients — phi is linear, so phi(a) g expands through precomputed images of the\\nstandard monomials — and the search is an exact linear solve\\n(fraction-free over the rationals, plain elimination mod p,\\nfirst-nonzero pivoting for determinism). The unknown count is guarded by\\na budget (default 50 000, WEYLFORGE_UNKNOWN_BUDGET). Failure at a cutoff is not a proof of non-generation, only the\\nhonest verdict “none at this cutoff”; success is monotone in the cutoff,\\nand every certificate the solver returns passes the verifier — the\\nacceptance suite enforces both. A right-module variant mirrors the system ( x_i g_j on the left,\\ncoefficients acting from the right).","breadcrumbs":"Module generation certificates » Searching for certificates","id":"21","title":"Searching for certificates"},"22":{"body":"For the identity, G = {1} works at cutoff 1: the equations read x_i = phi(x_i) 1. For the automorphism x -> x, d -> d + x^2 and G = {1}, the d-equation needs the preimage b = d - x^2, found at\\ncutoff 2: $ weylforge gen-solve --file shift.endo --cutoff 2\\ngeneration side=left n=1 m=1 cutoff=2 char=0\\ng1 = 1\\na1.1.1 = x1\\nb1.1.1 = -x1^2 + d1 $ weylforge gen-solve --file shift.endo --cutoff 2 > shift.cert\\n$ weylforge gen-verify --file shift.endo --cert shift.cert\\nverified: yes A more interesting case is the map x -> x + x^2, d -> d over F_2\\n(only valid at that prime, where [d, x + x^2] = 1 + 2x = 1). Its image\\nis a proper subalgebra, and G = {1} certifies nothing even at cutoff 4,\\nbut G = {1, x} certifies generation already at small cutoffs — matching\\nthe commutative picture, where F_2[X] is free of rank 2 with basis {1, X} over F_2[X + X^2].","breadcrumbs":"Module generation certificates » Worked examples","id":"22","title":"Worked examples"},"23":{"body":"The probe is the top of the tower: given a Weyl endomorphism with\\nrational coefficients and a list of primes, it reduces mod each prime and\\nruns the full battery on the reduction, recording one verdict row per\\nprime. Nothing in the report ever claims a characteristic-zero\\nconclusion — finitely many primes cannot deliver one — but the per-prime\\nrows are exact, reproducible facts. At each prime p (skipped, with a notice, if p divides a coefficient\\ndenominator or is not prime): relations — the reduced images are re-validated against the\\ncommutation relations; reduction is a ring homomorphism, so a failure\\nhere would be an arithmetic bug, not a property of the input. etale — the restriction to the center must have unit Jacobian.\\nFor p > 2 deg this is a proven consequence of being an endomorphism,\\nso inside that window the verdict is asserted: a “no” aborts with an\\naudit failure instead of being reported as data. finite — the integrality test runs on the restriction; a yes\\ncarries the monic certificate’s degree data, a no carries the reason,\\nand a budget exhaustion downgrades the verdict to inconclusive. invertible — Groebner inversion of the restriction. Invertibility\\nof the restriction settles invertibility of the reduced endomorphism\\nitself, so a yes here means the reduction is an automorphism. The\\ninverse degree is audited against deg^(2n-1). lift — when the center inverts, the probe searches for the actual\\nWeyl-algebra inverse by exact linear algebra, trying degree cutoffs\\nupward (the --cutoff flag caps the search; the proven bound deg^(2n-1) caps it absolutely). A found lift is composed both ways\\nand audited. #![allow(unused)] fn main() { extern crate weylforge;\\nuse weylforge::endoscope::dixmier_probe;\\nuse weylforge::groebner::GbConfig;\\nuse weylforge::scalars::FieldCtx;\\nuse weylforge::weyl::{WeylElement, WeylEndo}; let q = FieldCtx::Rationals;\\nlet x = WeylElement::gen_x(1, q, 0);\\nlet d = WeylElement::gen_d(1, q, 0);\\nlet phi = WeylEndo::new(vec![x.clone()], vec![d.add(&x.pow(2).unwrap()).unwrap()]).unwrap(); let report = dixmier_probe(&phi, &[5, 7], 2, &GbConfig::default()).unwrap();\\nfor record in &report.records { assert!(record.etale.is_yes()); assert!(record.finite.is_yes()); assert!(record.invertible.is_yes()); assert!(record.weyl_inverse.is_some());\\n} }","breadcrumbs":"The reduction probe » The reduction probe","id":"23","title":"The reduction probe"},"24":{"body":"Why insist on per-prime honesty? Because small primes genuinely behave\\ndifferently. The map x -> x + x^p, d -> d (over F_p) satisfies the relations at its own prime ( [d, x + x^p] = 1 + p x^(p-1)),\\nrestricts to the étale and finite center map X -> X + X^p, Y -> Y —\\nthe monic witness is T^p + T - (X + X^p) — and is not invertible:\\nan additive polynomial of degree p is a nontrivial finite covering of\\nthe affine line, something that cannot happen in characteristic zero.\\nThe probe reports exactly that: $ weylforge probe --file artin-schreier-2.endo --primes 2 --cutoff 4\\nprobe fingerprint=d37f3f6c0b9dd886 n=1 degree=2 lift-cutoff=4\\n== prime 2 relations yes reduced degree 2 etale yes (window not binding) finite yes (monic certificate: max T-degree 2 <= 4, max preimage degree 1 <= 48) invertible no “Finite and étale” therefore implies “invertible” only once the prime is\\nlarge relative to the degree, and the probe’s verdict table is the\\nempirical shadow of that threshold: the acceptance suite pins this map as\\nétale, finite and non-invertible at p = 2 and p = 3 on every run.","breadcrumbs":"The reduction probe » The standing counterexample","id":"24","title":"The standing counterexample"},"25":{"body":"Reports carry a fingerprint of the input and render in two formats\\n( --format text | records). Primes are processed in sorted order, all\\nsub-computations are deterministic, and repeated invocations produce\\nbyte-identical bytes — that determinism is itself an acceptance\\ncriterion.","breadcrumbs":"The reduction probe » Determinism","id":"25","title":"Determinism"},"26":{"body":"weylforge <subcommand> [--format text|records] [flags] Exit status: 0 — a verdict was computed, including negative verdicts\\n(“not an automorphism” is an answer, not an error); 1 — usage or parse\\nerror; 2 — a resource budget was exceeded.","breadcrumbs":"Command-line reference » Command-line reference","id":"26","title":"Command-line reference"},"27":{"body":"expr := [\'-\'] term ((\'+\' | \'-\') term)*\\nterm := coeff (\'*\'? varpow)* | varpow (\'*\'? varpow)*\\nvarpow := var (\'^\' nat)?\\ncoeff := nat | nat \'/\' nat\\nvar := (\'x\' | \'d\' | \'X\' | \'Y\') nat Weyl expressions use x1..xn, d1..dn; plain polynomials x1..xn; center\\npolynomials X1..Xn, Y1..Yn. Input need not be in normal order — d1*x1\\nparses to x1*d1 + 1. Output is canonical: terms in descending\\ngraded-lex order, so parse-print round-trips are exact.","breadcrumbs":"Command-line reference » Expression grammar","id":"27","title":"Expression grammar"},"28":{"body":"ring weyl n=1 char=0 ring poly n=2 char=5 ring center n=1 char=2\\nx1 -> x1 x1 -> x1 + 3*x2^2 X1 -> X1^2 + X1\\nd1 -> x1^2 + d1 x2 -> x2 Y1 -> Y1 One image line per generator, blank lines ignored, char= either 0 or\\na prime below 2^31. Weyl files are validated against the commutation\\nrelations on load. center files are what restrict-center emits and\\nare accepted by every polynomial command.","breadcrumbs":"Command-line reference » Endomorphism files","id":"28","title":"Endomorphism files"},"29":{"body":"command does mul --lhs E --rhs E [--ring R] normal-form product commutator --lhs E --rhs E [--ring R] [lhs, rhs] deg --expr E [--ring R] total degree apply --file F --expr E image of an expression compose --file F --file G ... composition (first file applied last) center-test --expr E --ring R centrality verdict center-extract --expr E --ring R center coordinates X, Y restrict-center --file F restriction to the center as a center file expand-qp --expr E --file F coordinates over the center in the Q^a P^b basis jacobian --file F Jacobian determinant etale --file F unit-Jacobian verdict gb --ring R --gen E ... [--order lex|grevlex|elim:k] reduced Groebner basis report minpoly --ring R --f E --gen E ... minimal polynomial or transcendental integral --file F integrality certificate with degree audits invert --file F inverse endomorphism plus degree audit gabber-audit --file F invert and report deg(inverse) <= deg^(n-1) invbound-audit --file F --file G mutual-inverse check and deg^(2n-1) audit etale-window --file F --primes p,q,.. per-prime unit-Jacobian verdicts gen-solve --file F --cutoff K [--gen E ...] [--side left|right] generation certificate search gen-verify --file F --cert C exact certificate check probe --file F --primes p,q,.. [--cutoff K] the full per-prime battery When --ring is omitted on the expression commands, a rational Weyl ring\\nis inferred from the largest variable index.","breadcrumbs":"Command-line reference » Subcommands","id":"29","title":"Subcommands"},"3":{"body":"","breadcrumbs":"Weyl-algebra arithmetic » Weyl-algebra arithmetic","id":"3","title":"Weyl-algebra arithmetic"},"30":{"body":"Two environment variables override the resource budgets: WEYLFORGE_PAIR_BUDGET — S-pairs per Groebner run (default 200 000); WEYLFORGE_UNKNOWN_BUDGET — unknowns per generation solve (default\\n50 000). Exceeding a budget exits with status 2 and an explanatory message; no\\npartial or approximate answers are ever printed.","breadcrumbs":"Command-line reference » Budgets","id":"30","title":"Budgets"},"31":{"body":"--format text is the human rendering shown throughout this guide. --format records emits one key=value line per record with a fixed key\\norder, e.g. for the probe: fingerprint=df861a68e72e3170 n=1 degree=2 lift_cutoff=2\\nprime=5 status=ok relation=yes degree=2 etale=yes window=binding finite=yes invertible=yes inverse_degree=2 gabber_bound=2 weyl_inverse=2 invbound=2 Both renderings are deterministic; identical invocations produce\\nbyte-identical output.","breadcrumbs":"Command-line reference » Report formats","id":"31","title":"Report formats"},"4":{"body":"Products x^u d^v — all the x-powers to the left of all the d-powers — are called standard monomials, and they form a basis of the\\nWeyl algebra as a vector space. An element of weylforge is therefore a\\nsparse map from exponent pairs (u, v) to nonzero coefficients, and two\\nelements are equal exactly when their term maps are equal. That basis\\nfact is what makes the equality test trivial and every algorithm\\ndownstream of it honest. Multiplication has to re-normalize, because a d moving past an x\\npicks up a derivative term. One swap at a time, d x = x d + 1 . Iterating swaps is correct but exponential; the library instead applies\\nthe closed per-variable formula d^b x^c = sum over k of C(b,k) C(c,k) k! x^(c-k) d^(b-k) , one variable pair at a time (distinct pairs commute, so they do not\\ninteract). The binomials and factorials are computed in the coefficient\\nfield, which means they reduce mod p automatically — a product over F_2 and the same product over the rationals can look very different,\\nand both are right. The single-step rewriter is not gone: it survives in the test suite as an\\nindependent oracle, and the acceptance suite checks the two against each\\nother on hundreds of random pairs. #![allow(unused)] fn main() { extern crate weylforge;\\nuse weylforge::scalars::FieldCtx;\\nuse weylforge::weyl::WeylElement; let ctx = FieldCtx::Rationals;\\nlet x = WeylElement::gen_x(1, ctx, 0);\\nlet d = WeylElement::gen_d(1, ctx, 0);\\n// the defining relation [d, x] = 1\\nassert_eq!(d.commutator(&x).unwrap(), WeylElement::one(1, ctx));\\n// d^2 x^2 = x^2 d^2 + 4 x d + 2\\nlet p = d.mul(&d).unwrap().mul(&x.mul(&x).unwrap()).unwrap();\\nassert_eq!(p.to_string(), \\"x1^2*d1^2 + 4*x1*d1 + 2\\"); }","breadcrumbs":"Weyl-algebra arithmetic » Standard monomials and normal form","id":"4","title":"Standard monomials and normal form"},"5":{"body":"The degree of a nonzero element is the largest |u| + |v| over its\\nsupport; the zero element has none, and asking for it is an error rather\\nthan a convention. Degrees filter multiplication: deg(ab) <= deg(a) + deg(b), with equality over the rationals (the\\nassociated graded algebra is a polynomial ring, hence a domain). Exponent\\ngrowth is guarded by a configurable total-degree limit — exceeding it is\\na hard error, never silent truncation.","breadcrumbs":"Weyl-algebra arithmetic » Degrees","id":"5","title":"Degrees"},"6":{"body":"An endomorphism is described by where it sends the 2n generators. Not\\nevery tuple of images qualifies: the images must satisfy the same\\ncommutation relations, and the WeylEndo constructor checks all of them,\\nso a value of that type is an algebra homomorphism. The checked\\nrelations also power check_weyl_relations as a standalone test: the\\ntuple Q = (x^2), P = (d) fails because [d, x^2] = 2x is not 1. Applying an endomorphism expands sum a_uv Q^u P^v in normal form;\\ncomposition applies one endomorphism to the images of another and\\nre-validates the relations. Degrees of endomorphisms are the maximum over\\nthe generator images. #![allow(unused)] fn main() { extern crate weylforge;\\nuse weylforge::scalars::FieldCtx;\\nuse weylforge::parse::{parse_weyl, RingDescriptor}; let ring = RingDescriptor::weyl(1, FieldCtx::Rationals);\\nlet a = parse_weyl(\\"d1\\", &ring).unwrap();\\nlet b = parse_weyl(\\"x1\\", &ring).unwrap();\\n// d1 * x1 normalizes to x1*d1 + 1\\nassert_eq!(a.mul(&b).unwrap().to_string(), \\"x1*d1 + 1\\"); } On the command line the same computations are mul, commutator, deg, apply and compose; expressions use the grammar shown above\\n( 3*x1^2*d1 + 5*x2 - 1/2), and endomorphisms live in two-or-more-line .endo files described in the CLI reference.","breadcrumbs":"Weyl-algebra arithmetic » Endomorphisms","id":"6","title":"Endomorphisms"},"7":{"body":"Over the rationals the center of the Weyl algebra is just the scalars.\\nOver a prime field everything changes: x_i^p and d_i^p commute with\\neverything (the binomial coefficients that would witness otherwise all\\nvanish mod p), and the center is exactly the polynomial ring they\\ngenerate, C = F_p[x_1^p, .., x_n^p, d_1^p, .., d_n^p] . The Weyl algebra is a free module of rank p^(2n) over C. This single\\nfact is the engine behind the whole positive-characteristic pipeline.","breadcrumbs":"The center in characteristic p » The center in characteristic p","id":"7","title":"The center in characteristic p"},"8":{"body":"In the standard-monomial basis, centrality is visible with no commutators\\nat all: an element is central exactly when every exponent in its support\\nis divisible by p. The library decides membership that way\\n( center_test, linear in the number of terms) and keeps the 2n-commutator\\nroute ( centralizer_test) as a property-tested cross-check — the\\nacceptance suite verifies the two agree on hundreds of random elements. A central element is re-expressed in commutative coordinates by dividing\\nevery exponent by p: the result is an ordinary polynomial in the 2n\\nvariables X_1..X_n, Y_1..Y_n standing for x_i^p, d_i^p. Substituting\\nback ( inflate) is exactly inverse to extraction.","breadcrumbs":"The center in characteristic p » Deciding centrality, changing coordinates","id":"8","title":"Deciding centrality, changing coordinates"},"9":{"body":"An endomorphism phi maps x_i^p to phi(x_i)^p, which is again\\ncentral. Restricting phi to C therefore yields an ordinary polynomial\\nendomorphism in the X, Y coordinates — the bridge from noncommutative\\nquestions to commutative ones that Groebner bases can answer. #![allow(unused)] fn main() { extern crate weylforge;\\nuse weylforge::charp::{center_extract, restrict_center};\\nuse weylforge::scalars::FieldCtx;\\nuse weylforge::weyl::{WeylElement, WeylEndo}; let f5 = FieldCtx::prime_field(5).unwrap();\\nlet x = WeylElement::gen_x(1, f5, 0);\\nlet d = WeylElement::gen_d(1, f5, 0); // x^5 is central at p = 5; its center coordinate is X1\\nlet coords = center_extract(&x.pow(5).unwrap()).unwrap();\\nassert_eq!(coords.poly().to_string(), \\"x1\\");\\nassert_eq!(coords.inflate(), x.pow(5).unwrap()); // x -> x, d -> d + x^2 restricts to X -> X, Y -> Y + X^2\\nlet phi = WeylEndo::new(vec![x.clone()], vec![d.add(&x.pow(2).unwrap()).unwrap()]).unwrap();\\nlet center = restrict_center(&phi).unwrap();\\nassert_eq!(center.img()[1].to_string(), \\"x1^2 + x2\\"); } A warning about small primes: the clean identity (d + f(x))^p = d^p + f(x)^p needs p large relative to f. At p = 3\\nthe map d -> d + x^2 restricts to Y -> Y + X^2 + 2 — the extra\\nconstant is the second derivative of x^2 — and the library computes\\nthat exactly rather than assuming the shortcut. (The restriction is an\\nautomorphism of the center either way.)","breadcrumbs":"The center in characteristic p » Restriction of endomorphisms","id":"9","title":"Restriction of endomorphisms"}},"docInfo":{"0":{"body":161,"breadcrumbs":2,"title":1},"1":{"body":29,"breadcrumbs":3,"title":2},"10":{"body":97,"breadcrumbs":8,"title":5},"11":{"body":23,"breadcrumbs":6,"title":3},"12":{"body":48,"breadcrumbs":5,"title":2},"13":{"body":119,"breadcrumbs":5,"title":2},"14":{"body":55,"breadcrumbs":5,"title":2},"15":{"body":33,"breadcrumbs":4,"title":2},"16":{"body":92,"breadcrumbs":5,"title":3},"17":{"body":100,"breadcrumbs":4,"title":2},"18":{"body":75,"breadcrumbs":4,"title":2},"19":{"body":65,"breadcrumbs":5,"title":3},"2":{"body":91,"breadcrumbs":4,"title":3},"20":{"body":82,"breadcrumbs":6,"title":3},"21":{"body":79,"breadcrumbs":5,"title":2},"22":{"body":116,"breadcrumbs":5,"title":2},"23":{"body":203,"breadcrumbs":4,"title":2},"24":{"body":131,"breadcrumbs":4,"title":2},"25":{"body":27,"breadcrumbs":3,"title":1},"26":{"body":24,"breadcrumbs":6,"title":3},"27":{"body":53,"breadcrumbs":5,"title":2},"28":{"body":55,"breadcrumbs":5,"title":2},"29":{"body":205,"breadcrumbs":4,"title":1},"3":{"body":0,"breadcrumbs":6,"title":3},"30":{"body":34,"breadcrumbs":4,"title":1},"31":{"body":45,"breadcrumbs":5,"title":2},"4":{"body":176,"breadcrumbs":7,"title":4},"5":{"body":43,"breadcrumbs":4,"title":1},"6":{"body":114,"breadcrumbs":4,"title":1},"7":{"body":48,"breadcrumbs":6,"title":3},"8":{"body":63,"breadcrumbs":7,"title":4},"9":{"body":121,"breadcrumbs":5,"title":2}},"length":32},"lang":"English"}}'));