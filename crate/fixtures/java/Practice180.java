public class Practice180 {
  public static int digitSum(int x) {
    int result = 0;
    while (x > 0) {
      result += x % 10;
      x /= 10;
    }
    return result;
  }

  public static String reversed(String text) {
    StringBuilder out = new StringBuilder();
    for (int j = text.length() - 1; j >= 0; j--) {
      out.append(text.charAt(j));
    }
    return out.toString();
  }

  static int countVowels(String text) {
    int count = 0;
    for (int j = 0; j < text.length(); j++) {
      char ch = Character.toLowerCase(text.charAt(j));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        count++;
        break;
        default:
        break;
      }
    }
    return count;
  }

  public static void main(String[] args) {
    System.out.println("Digits: " + digitSum(30360));
    String rev = reversed("java");
    System.out.println(rev);
    System.out.println(countVowels("banana"));
  }
}
