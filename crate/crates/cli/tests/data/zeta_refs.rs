//! Frozen 50-digit reference values of zeta(1+it), t = 5, 10, ..., 250.
//! Produced by the fixed-point Euler-Maclaurin evaluator in
//! zetabound-oracle (N = 10^5, k = 2, 192 fractional bits); regenerate
//! with: cargo run -p zetabound-oracle --example gen_zeta_refs
//!
//! Columns: t, Re zeta(1+it), Im zeta(1+it), truncation error bound.

pub const ZETA_REFS: &[(f64, &str, &str, f64)] = &[
    (5.0, "0.76021763340346501666824177241520883434988013265717", "0.17854887325572433015129108057760289804123277819665", 5.24062542152829e-16),
    (10.0, "1.39028731323740142678860593208545629057009293061806", "-0.10978515306630205689685753912596327785937250147938", 3.5022616876226686e-15),
    (15.0, "0.45464473586793981948940024836371065214808047140320", "0.49854401920492286655989151954711403677614380443861", 1.1390371192378817e-14),
    (20.0, "0.69968489989598495678710914138984494379277551009109", "-0.67254649619600053025260387321638683535866337303781", 2.6642962323330388e-14),
    (25.0, "0.47867125634713198368357590116402630024191874732468", "0.12587798578717484258888677365004483828172851736927", 5.171483055334857e-14),
    (30.0, "0.42426477808417825431890443923725814154158962848050", "-0.48082945406920911048704075576172702198321865644199", 8.906078937376147e-14),
    (35.0, "1.87445579713074627128020550311337015301908058551737", "0.58839565259512250992883946839384955882360728480816", 1.4113565533295978e-13),
    (40.0, "0.84979547924680675481902039599543703295218493826974", "-0.49177628646071868838568761987705403280060693004468", 2.103942457443701e-13),
    (45.0, "1.98658585635392948996322415313315818403234230208191", "0.84743439476348485391437240597142903889654707342671", 2.992913781654069e-13),
    (50.0, "0.44103873082309397882233914282204706294400956363570", "0.28158245502968301205069491112343006334537532269768", 4.1028187024548586e-13),
    (55.0, "1.77786502765952907776446713940616146736562358707995", "-0.41037118462185901280615459091170313634413670608366", 5.458205396732682e-13),
    (60.0, "0.49368838749597814995415313839286744393528316413773", "0.10985469210994172429936726435391269052718253524886", 7.083622041558237e-13),
    (65.0, "0.55446985994808980585842062848125749847924758553413", "-0.46195030273135066984770116574474968062260204951078", 9.003616814095345e-13),
    (70.0, "0.74161437397657977167891928301325388950373728497388", "0.42538216366872798076756723596745718485900214357968", 1.1242737891557932e-12),
    (75.0, "0.62858467802892010660456271804651452967506906933138", "-0.95954719659827191221123389147741023219840638374063", 1.3825533451188275e-12),
    (80.0, "0.96271610348878597157848516035792926023349956242329", "0.99479826899068094474237241518721839350777308048039", 1.6776551670245444e-12),
    (85.0, "0.68118455745709607167688297695140350278110292167435", "0.16245119589580572189840198627578755788832764500519", 2.0120340725998795e-12),
    (90.0, "1.63931636560266773010316425837352006605320525709823", "1.26144664809489624160160908518079685334234348790351", 2.38814487957242e-12),
    (95.0, "0.43671791981949277590607141805931085329584429938903", "0.00906516575552095724600862134753575105163212760647", 2.8084424056701804e-12),
    (100.0, "1.63283350668671185272387253805930720394724404611304", "-0.06813120384181249067329184381364650565510204908680", 3.275381468621456e-12),
    (105.0, "0.61615704088054457421381176445241846722808440369674", "-0.06652600631605767312981154693563562591279244355915", 3.7914168861547424e-12),
    (110.0, "1.00128738139908630521646296184499666600542228489536", "-1.50748735156186178704271115261738656707194751577685", 4.3590034759986605e-12),
    (115.0, "0.90862033392229595774082022015726583450578426513372", "0.32304001776160409667728956580979032869063773649303", 4.980596055881939e-12),
    (120.0, "1.55165295763588222597803048609873800448599893867366", "-0.50392813731944324262911707084971192465011882261734", 5.658649443533363e-12),
    (125.0, "0.81614662479500509280060147735330662368638225451696", "1.23663585821864142179882946252342176696056704828665", 6.395618456681781e-12),
    (130.0, "0.66755180106244489710440608042809834291469556042753", "-0.06617450518853867881070044716238501505732305698597", 7.19395791305607e-12),
    (135.0, "0.59932077086362424862408453938922730496675801340731", "0.71200038263417336290110630033927510798580667714988", 8.056122630385137e-12),
    (140.0, "0.49850292143309037261416402929354706533215362084578", "-0.01984650443998585343360999025222204035521912405611", 8.984567426397918e-12),
    (145.0, "1.83201796106288723813331657356280190232896622882600", "-0.80203649807166120953402175588657918678415624700094", 9.981747118823349e-12),
    (150.0, "0.41286353099306860451873477692983720337914529569237", "-0.22188274491562444898649202961192548557348544370171", 1.1050116525390394e-11),
    (155.0, "1.94334240225910054362217237084142901395231425784649", "-1.25955851590976839061972413593059941024283778005202", 1.2192130463828021e-11),
    (160.0, "1.27046978472452023376769407984350306291623231587367", "0.48647944202335367232898294927061760467159226430675", 1.3410243751865212e-11),
    (165.0, "1.04747929984858309817537626986010171863324912970157", "-0.80101801227823947611889629712459630093689007347118", 1.4706911207230942e-11),
    (170.0, "0.29009892258030724929954599659897195846310571304946", "0.52084446963645626125059835287375096532859177841299", 1.6084587647654195e-11),
    (175.0, "0.64854373713896983645024309060879126862703948147994", "-0.00485353475862911011894576114984908096129825423053", 1.7545727890863974e-11),
    (180.0, "0.77237066823229095575034864477814662358103811067791", "0.43542476683132750635477310161488502787096178539004", 1.9092786754589266e-11),
    (185.0, "0.30292931610817445939362846311409228649134938640787", "-0.22990097704540990142181273976857019624762711634341", 2.072821905655907e-11),
    (190.0, "1.66165995751507752567518896366307621706495101826738", "0.50881208056118723513127239150759593382275150702033", 2.245447961450238e-11),
    (195.0, "0.74921873301637456614970408323198179162312601746725", "-0.26706571460017683385731867023588725335354856816237", 2.4274023246148212e-11),
    (200.0, "2.59590906307013714459426876911896128730536390250346", "-1.05258626522783513746019979337889775636964457157755", 2.6189304769225558e-11),
    (205.0, "0.57741392747282691836645664189221604585957944947225", "0.26427985106681780846318457216964599209532787060758", 2.820277900146342e-11),
    (210.0, "1.19966891814632931407385725439641266884673558530594", "0.12197633067432931161259287749735897516566161010684", 3.0316900760590814e-11),
    (215.0, "0.59679000846070778175198872068607304286067182329367", "0.49694704844992660660003628070063946989054706175077", 3.2534124864336744e-11),
    (220.0, "0.60641341210183191391349437714760936531097747507727", "-0.52345359253836264555985200659888135899766030370013", 3.4856906130430195e-11),
    (225.0, "0.59307326093685594916915213544351556236610372429698", "0.40752015281244712305444483138024210018408089892665", 3.72876993766002e-11),
    (230.0, "0.93637238601390885272584379520841598423336322303152", "-0.34737574381425035736548891059603446422522587675267", 3.9828959420575775e-11),
    (235.0, "2.66679375329248015037045454671850354444339357397194", "0.38925700718712788520838699253261167416716522158245", 4.2483141080085884e-11),
    (240.0, "0.77573830433425008285521579455402666363739484954835", "0.04805403387318214901061895611397423795958788933674", 4.5252699172859583e-11),
    (245.0, "2.20764175361804282742570617499924696870781619373455", "1.07818547152077326086938825428312787886242564987498", 4.814008851662586e-11),
    (250.0, "0.62049961213999406536340470969109990219788692503571", "0.30281956929850732211885815501333875071401200660767", 5.1147763929113724e-11),
];
