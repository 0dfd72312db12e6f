public class Quiz24 {
  public static String reversed(String input) {
    StringBuilder sb = new StringBuilder();
    for (int idx = input.length() - 1; idx >= 0; idx--) {
      sb.append(input.charAt(idx));
    }
    return sb.toString();
  }

  public static double computeBmi(double weight, double height) {
    double value = weight / Math.pow(height, 2);
    return Math.round(value * 10) / 10.0;
  }

  static int vowels(String input) {
    int c = 0;
    for (int idx = 0; idx < input.length(); idx++) {
      char ch = Character.toLowerCase(input.charAt(idx));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        c++;
        break;
        default:
        break;
      }
    }
    return c;
  }

  public static int addAll(int[] values) {
    int sum = 0;
    for (int idx = 0; idx < values.length; idx++) {
      sum += values[idx];
    }
    return sum;
  }

  public static int abs(int x) {
    return x < 0 ? -x : x;
  }

  public static int sumDigits(int x) {
    int sum = 0;
    while (x > 0) {
      sum += x % 10;
      x /= 10;
    }
    return sum;
  }

  static int gcd(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  public static void main(String[] args) {
    int[] numbers = {5, 4, 2};
    String rev = reversed("java");
    System.out.println(rev);
    System.out.println("BMI: " + computeBmi(51.5, 1.90));
    System.out.println(vowels("programming"));
    System.out.println("Sum: " + addAll(numbers));
    System.out.println(abs(35));
    System.out.println("Digits: " + sumDigits(78175));
    System.out.println("GCD: " + gcd(62, 35));
  }
}
